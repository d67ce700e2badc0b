#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pomlab/asymptotics.hpp"
#include "pomlab/pompeiu.hpp"

using namespace pomlab;
using namespace std::complex_literals;

TEST_SUITE("asymptotics") {

TEST_CASE("psi closed values and pole behavior") {
    const StarShape disc = StarShape::disc(1.0);
    const PompeiuParams params(1.0);
    CHECK(psi(disc, params, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    // the cos^2 factor sends psi to -inf at the poles
    CHECK(psi(disc, params, oracles::pi / 2.0 - 1e-3) < psi(disc, params, 0.0) - 10.0);
    CHECK_THROWS_AS(psi(disc, params, oracles::pi / 2.0), std::invalid_argument);
    CHECK_THROWS_AS(psi(disc, params, -oracles::pi / 2.0 + 1e-13), std::invalid_argument);
}

TEST_CASE("psi'' closed form vs finite differences") {
    const double eps = 0.3;
    const StarShape s(1.0, {eps}, {});
    const PompeiuParams params(1.0);
    const double hand = -2.0 * eps / (1.0 + eps) - 2.0;  // 2 f''/f - 2 at 0
    CHECK(psi_deriv2(s, params, 0.0) == doctest::Approx(hand).epsilon(1e-14));
    const double h = 1e-4;
    const double fd = (psi(s, params, h) - 2.0 * psi(s, params, 0.0) +
                       psi(s, params, -h)) / (h * h);
    CHECK(fd == doctest::Approx(psi_deriv2(s, params, 0.0)).epsilon(1e-6));
}

TEST_CASE("stationary points of the disc sit where tan vanishes") {
    const std::vector<PhasePoint> pts =
        stationary_points(StarShape::disc(1.0), PompeiuParams(2.0));
    REQUIRE(pts.size() == 2);
    for (const PhasePoint& p : pts) {
        CHECK(std::abs(std::tan(p.phi)) <= 1e-12);
        CHECK(p.gamma == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(!p.degenerate);
    }
}

TEST_CASE("single-bump shape has its maximizer at the origin") {
    const double eps = 0.3, k = 2.0;
    const StarShape s(1.0, {eps}, {});
    const std::vector<PhasePoint> pts = stationary_points(s, PompeiuParams(k));
    REQUIRE(!pts.empty());
    const PhasePoint& top = pts.front();
    CHECK(std::abs(top.phi) <= 1e-10);
    CHECK(top.psi_value ==
          doctest::Approx(std::log(k * k * (1.0 + eps) * (1.0 + eps))).epsilon(1e-12));
    CHECK(top.gamma == doctest::Approx(2.0 + 2.0 * eps / (1.0 + eps)).epsilon(1e-8));

    // grid dominance: no sampled psi exceeds the reported maximum
    for (int i = 0; i < 2048; ++i) {
        const double phi = -oracles::pi + 2.0 * oracles::pi * i / 2048.0;
        if (std::abs(std::cos(phi)) < 1e-3) continue;
        CHECK(psi(s, PompeiuParams(k), phi) <= top.psi_value + 1e-12);
    }
}

TEST_CASE("two-fold symmetric shape carries two equal maximizers") {
    const StarShape s(1.0, {0.0, 0.1}, {});
    const std::vector<PhasePoint> pts = stationary_points(s, PompeiuParams(3.0));
    REQUIRE(pts.size() == 2);
    CHECK(std::abs(pts[0].psi_value - pts[1].psi_value) <= 1e-12);
    CHECK(std::abs(std::abs(pts[0].phi) + std::abs(pts[1].phi) - oracles::pi) <= 1e-9);
}

TEST_CASE("returned points satisfy the stationary residual and curvature checks") {
    const PompeiuParams params(2.5);
    for (const StarShape& s : {StarShape(1.0, {0.2, 0.05}, {0.1}),
                               StarShape(1.0, {-0.15}, {0.2, 0.0, 0.05})}) {
        for (const PhasePoint& p : stationary_points(s, params)) {
            CHECK(std::abs(s.eval(p.phi, 1) / s.eval(p.phi) - std::tan(p.phi)) <= 1e-10);
            const double h = 1e-4;
            const double fd = (psi(s, params, p.phi + h) - 2.0 * psi(s, params, p.phi) +
                               psi(s, params, p.phi - h)) / (h * h);
            CHECK(std::abs(fd - psi_deriv2(s, params, p.phi)) <=
                  1e-5 * std::max(1.0, std::abs(fd)));
            if (p.f2 < 0.0 && std::abs(std::tan(p.phi)) < 1e-8) {
                // the stationary equation is strictly decreasing through an
                // aligned maximum with f'' < 0
                CHECK(psi_deriv2(s, params, p.phi) < 0.0);
            }
        }
    }
}

TEST_CASE("prediction on the disc is exactly zero") {
    const StarShape disc = StarShape::disc(1.0);
    const PompeiuParams params(2.0);
    const std::vector<PhasePoint> pts = stationary_points(disc, params);
    const AsymptoticPrediction pred = predict_moment(disc, params, 50, pts.front());
    CHECK(std::abs(pred.amplitude) == 0.0);
    CHECK(pred.log_main == doctest::Approx(50.0 * std::log(4.0)).epsilon(1e-13));
}

TEST_CASE("log_main reproduces the hand value") {
    const StarShape s(1.0, {0.3}, {});
    const PompeiuParams params(1.0);
    const std::vector<PhasePoint> pts = stationary_points(s, params);
    const AsymptoticPrediction pred = predict_moment(s, params, 100, pts.front());
    CHECK(pred.log_main == doctest::Approx(100.0 * std::log(1.69)).epsilon(1e-12));
}

TEST_CASE("per-point amplitudes share one imaginary sign at maxima") {
    const PompeiuParams params(3.0);
    const StarShape s(1.0, {0.0, 0.1}, {});
    for (const PhasePoint& p : stationary_points(s, params)) {
        const AsymptoticPrediction pred = predict_moment(s, params, 80, p);
        const double sign_ref = params.k * p.f0 * p.f0 * p.f2;
        CHECK(pred.amplitude.imag() * sign_ref > 0.0);
    }
}

TEST_CASE("mirror-symmetric maximizer pair cancels the even moments") {
    // f(pi - phi) = f(phi) flips the even-moment integrand, so I_{2m} = 0
    // identically; the oriented pair prediction reproduces that.
    const StarShape s(1.0, {0.0, 0.1}, {});
    const PompeiuParams params(3.0);
    const std::vector<PhasePoint> pts = stationary_points(s, params);
    REQUIRE(pts.size() == 2);

    const int m = 150;
    const AsymptoticPrediction p0 = predict_moment(s, params, m, pts[0]);
    const AsymptoticPrediction p1 = predict_moment(s, params, m, pts[1]);
    const Complex sum = p0.oriented_amplitude(true) + p1.oriented_amplitude(true);
    CHECK(std::abs(sum) <= 1e-12 * std::abs(p0.amplitude_refined));

    const MomentReport direct = moment(s, params, 2 * m);
    CHECK(std::abs(direct.scaled_value) <= 1e-12 * std::abs(p0.amplitude_refined));
}

TEST_CASE("asymmetric maximizer pair requires the oriented sum") {
    // equal heights at 0 and pi but different curvatures
    const StarShape s(1.0, {0.02, 0.1, -0.02}, {});
    const PompeiuParams params(3.0);
    const AsymptoticsComparison cmp = compare_asymptotics(s, params, {150, 300});
    CHECK(cmp.maximizer_count == 2);
    CHECK(std::abs(cmp.rows[1].ratio_refined - 1.0) <= 0.05);

    // a single point misses the second contribution badly
    const std::vector<PhasePoint> pts = stationary_points(s, params);
    const AsymptoticPrediction lone = predict_moment(s, params, 300, pts[0]);
    const MomentReport direct = moment(s, params, 600);
    const double single_ratio =
        std::abs(direct.scaled_value) / std::abs(lone.oriented_amplitude(true));
    CHECK(std::abs(single_ratio - 1.0) > 0.25);
}

TEST_CASE("ratio stabilizes for the single-bump shape") {
    const StarShape s(1.0, {0.3}, {});
    const PompeiuParams params(3.0);
    const AsymptoticsComparison cmp = compare_asymptotics(s, params, {200, 400});
    CHECK(cmp.maximizer_count == 1);
    CHECK(cmp.ratio_abs_variation < 0.10);
    CHECK(std::abs(cmp.rows[1].ratio_refined - 1.0) <= 0.03);
    // the quoted main term is low by exactly 2^{3/2} when f''' = 0
    CHECK(cmp.paper_vs_refined_factor ==
          doctest::Approx(std::pow(2.0, 1.5)).epsilon(1e-9));
    for (const MomentComparisonRow& row : cmp.rows) CHECK(!row.flagged);
}

TEST_CASE("scaled moments carry no exponential drift") {
    const StarShape s(1.0, {0.3}, {});
    const PompeiuParams params(3.0);
    // |I_{2m}| e^{-m psi*} ~ C m^{-3/2}: the compensated sequence is flat
    double prev = 0.0;
    for (int m : {50, 100, 200, 400}) {
        const MomentReport r = moment(s, params, 2 * m);
        const double compensated = std::abs(r.scaled_value) * std::pow(m, 1.5);
        if (prev > 0.0) {
            CHECK(compensated / prev > 0.5);
            CHECK(compensated / prev < 2.0);
        }
        prev = compensated;
    }
}

TEST_CASE("moment modulus is invariant under an origin shift") {
    const StarShape s(1.0, {0.2}, {0.0, 0.1});
    const PompeiuParams params(3.0);
    const int m = 15;
    const MomentReport base = moment(s, params, 2 * m, MomentPath::scaled);

    // same integral with the dummy variable shifted: pull the integrand back
    const double shift = 0.7;
    const double amax = max_abs_a(s, params.k);
    auto integrand = [&](double phi) {
        const double p = phi + shift;
        const double f = s.eval(p);
        const double fp = s.eval(p, 1);
        const double a = params.k * f * std::cos(p);
        const double b = params.k * f * std::sin(p);
        const double ratio = a / amax;
        return fp * f * std::pow(ratio * ratio, m) * std::exp(1i * b);
    };
    const Complex shifted = periodic_integral(integrand, 1e-12).value;
    CHECK(std::abs(std::abs(shifted) - std::abs(base.scaled_value)) <=
          1e-10 * std::abs(base.scaled_value));
}

TEST_CASE("guards: discs, degenerate points, misaligned points") {
    CHECK_THROWS_AS(
        compare_asymptotics(StarShape::disc(1.0), PompeiuParams(2.0), {100}),
        std::invalid_argument);

    // f = 1 - 0.5 cos: psi'' = 0 at the aligned stationary point phi = 0
    const StarShape flat(1.0, {-0.5}, {});
    const PompeiuParams params(2.0);
    bool saw_degenerate = false;
    for (const PhasePoint& p : stationary_points(flat, params)) {
        if (p.degenerate) {
            saw_degenerate = true;
            CHECK_THROWS_AS(predict_moment(flat, params, 10, p), std::invalid_argument);
        }
    }
    CHECK(saw_degenerate);

    PhasePoint off;
    off.phi = 0.4;  // tan(0.4) != 0: not an aligned maximizer
    off.gamma = 1.0;
    CHECK_THROWS_AS(predict_moment(flat, params, 10, off), std::invalid_argument);
}

}  // TEST_SUITE
