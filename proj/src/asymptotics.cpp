#include "pomlab/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pomlab/bessel.hpp"

namespace pomlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleGuard = 1e-6;  // band excluded around +-pi/2
using namespace std::complex_literals;

void check_away_from_pole(double phi) {
    if (std::abs(std::cos(phi)) <= 1e-12) {
        throw std::invalid_argument("psi: phi is within 1e-12 of a pole of tan");
    }
}

// Half the stationary equation residual: h = f'/f - tan(phi) = Psi'/2.
double stationary_residual(const StarShape& shape, double phi) {
    return shape.eval(phi, 1) / shape.eval(phi) - std::tan(phi);
}

double stationary_residual_deriv(const StarShape& shape, double phi) {
    const double f = shape.eval(phi);
    const double fp = shape.eval(phi, 1);
    const double fpp = shape.eval(phi, 2);
    const double c = std::cos(phi);
    return fpp / f - (fp / f) * (fp / f) - 1.0 / (c * c);
}

double wrap_to_period(double phi) {
    while (phi >= kPi) phi -= 2.0 * kPi;
    while (phi < -kPi) phi += 2.0 * kPi;
    return phi;
}

PhasePoint make_phase_point(const StarShape& shape, const PompeiuParams& params,
                            double phi) {
    PhasePoint p;
    p.phi = wrap_to_period(phi);
    p.psi_value = psi(shape, params, p.phi);
    const double d2 = psi_deriv2(shape, params, p.phi);
    p.gamma = std::abs(d2);
    p.f0 = shape.eval(p.phi);
    p.f2 = shape.eval(p.phi, 2);
    p.f3 = shape.eval(p.phi, 3);
    p.degenerate = p.gamma < 1e-8;
    return p;
}

}  // namespace

double psi(const StarShape& shape, const PompeiuParams& params, double phi) {
    check_away_from_pole(phi);
    const double f = shape.eval(phi);
    const double c = std::cos(phi);
    return std::log(params.k * params.k * f * f * c * c);
}

double psi_deriv1(const StarShape& shape, const PompeiuParams& params, double phi) {
    (void)params;
    check_away_from_pole(phi);
    return 2.0 * stationary_residual(shape, phi);
}

double psi_deriv2(const StarShape& shape, const PompeiuParams& params, double phi) {
    (void)params;
    check_away_from_pole(phi);
    return 2.0 * stationary_residual_deriv(shape, phi);
}

std::vector<PhasePoint> stationary_points(const StarShape& shape,
                                          const PompeiuParams& params) {
    // Psi' is scanned on the two pole-free arcs between consecutive poles
    // of tan; parametrizing the second arc through 3 pi / 2 keeps phi = pi
    // in an arc interior. Psi -> -inf inside the guard bands, so no
    // stationary point can hide there.
    const double g = kPoleGuard;
    const std::array<std::pair<double, double>, 2> arcs{
        std::pair{-kPi / 2.0 + g, kPi / 2.0 - g},
        std::pair{kPi / 2.0 + g, 3.0 * kPi / 2.0 - g}};
    const double grid_step = 2.0 * kPi / 8192.0;

    std::vector<double> roots;
    auto refine = [&](double lo, double hi, double flo) {
        double a = lo, b = hi, fa = flo;
        for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
            const double mid = 0.5 * (a + b);
            const double fm = stationary_residual(shape, mid);
            if (fa * fm <= 0.0) {
                b = mid;
            } else {
                a = mid;
                fa = fm;
            }
        }
        double z = 0.5 * (a + b);
        for (int it = 0; it < 8; ++it) {  // Newton polish
            const double r = stationary_residual(shape, z);
            if (std::abs(r) <= 1e-13) break;
            z -= r / stationary_residual_deriv(shape, z);
        }
        roots.push_back(z);
    };

    for (const auto& [lo, hi] : arcs) {
        const int n = std::max(8, static_cast<int>(std::ceil((hi - lo) / grid_step)));
        double prev_phi = lo;
        double prev_val = stationary_residual(shape, lo);
        if (prev_val == 0.0) roots.push_back(lo);
        for (int i = 1; i <= n; ++i) {
            const double phi = lo + (hi - lo) * i / n;
            const double val = stationary_residual(shape, phi);
            if (val == 0.0) {
                roots.push_back(phi);
            } else if (prev_val != 0.0 && prev_val * val < 0.0) {
                refine(prev_phi, phi, prev_val);
            }
            prev_phi = phi;
            prev_val = val;
        }
    }

    // Canonicalize into [-pi, pi) and drop duplicates (a root found at an
    // arc endpoint, or pi aliasing -pi).
    for (double& r : roots) r = wrap_to_period(r);
    std::sort(roots.begin(), roots.end());
    std::vector<double> unique_roots;
    for (double r : roots) {
        if (unique_roots.empty() ||
            (r - unique_roots.back() > 1e-9 && (kPi - r) + (unique_roots.front() + kPi) > 1e-9)) {
            unique_roots.push_back(r);
        }
    }

    std::vector<PhasePoint> points;
    points.reserve(unique_roots.size());
    for (double r : unique_roots) points.push_back(make_phase_point(shape, params, r));
    std::stable_sort(points.begin(), points.end(),
                     [](const PhasePoint& a, const PhasePoint& b) {
                         if (a.psi_value != b.psi_value) return a.psi_value > b.psi_value;
                         return a.phi < b.phi;
                     });
    return points;
}

Complex AsymptoticPrediction::oriented_amplitude(bool refined) const {
    const Complex amp = refined ? amplitude_refined : amplitude;
    // At a maximizer aligned with phi* = pi the local slope of
    // b = k f sin(phi) is reversed, conjugating the phase factor e^{ib}.
    return std::cos(origin_shift) >= 0.0 ? amp : std::conj(amp);
}

AsymptoticPrediction predict_moment(const StarShape& shape,
                                    const PompeiuParams& params, int m,
                                    const PhasePoint& point) {
    if (m < 1) throw std::invalid_argument("predict_moment: m must be >= 1");
    if (point.degenerate) {
        throw std::invalid_argument(
            "predict_moment: degenerate stationary point (|Psi''| < 1e-8)");
    }
    if (std::abs(std::tan(point.phi)) > 1e-6) {
        throw std::invalid_argument(
            "predict_moment: stationary point is not aligned with the cos^2 "
            "weight (f' != 0 there), the quadratic main term does not apply");
    }

    // Exact coefficient rotation placing the maximizer at the origin.
    const StarShape shifted = shape.rotated(point.phi);
    const double f0 = shifted.eval(0.0);
    const double f2 = shifted.eval(0.0, 2);
    const double f3 = shifted.eval(0.0, 3);
    const double gamma = point.gamma;
    const double k = params.k;

    AsymptoticPrediction pred;
    pred.m = m;
    pred.origin_shift = point.phi;
    pred.log_main = m * point.psi_value;
    const Complex bracket = 1i * (k * f0 * f0 * f2) + f0 * f3 / 2.0;
    pred.amplitude = gamma_three_halves() / std::pow(m * gamma, 1.5) * bracket;
    // Full quadratic expansion of the exponent: Psi = Psi* - (gamma/2) phi^2
    // + (Psi'''/6) phi^3 + ..., which widens the Gaussian by sqrt(2) and
    // couples Psi''' = 2 f3/f0 to the odd part of the prefactor.
    const Complex bracket_refined = bracket + f2 * f3 / gamma;
    pred.amplitude_refined = gamma_three_halves() *
                             std::pow(2.0 / (m * gamma), 1.5) * bracket_refined;
    return pred;
}

AsymptoticsComparison compare_asymptotics(const StarShape& shape,
                                          const PompeiuParams& params,
                                          const std::vector<int>& m_list) {
    if (shape.is_disc()) {
        throw std::invalid_argument(
            "compare_asymptotics: disc rejected (both sides vanish identically)");
    }
    if (m_list.empty()) {
        throw std::invalid_argument("compare_asymptotics: m_list is empty");
    }

    const std::vector<PhasePoint> points = stationary_points(shape, params);
    const double psi_max = points.front().psi_value;
    std::vector<PhasePoint> maximizers;
    for (const PhasePoint& p : points) {
        if (p.psi_value >= psi_max - 1e-9 * std::max(1.0, std::abs(psi_max))) {
            if (p.degenerate) {
                throw std::invalid_argument(
                    "compare_asymptotics: a global maximizer is degenerate");
            }
            maximizers.push_back(p);
        }
    }

    AsymptoticsComparison out;
    out.maximizer_count = static_cast<int>(maximizers.size());

    double abs_min = 0.0, abs_max = 0.0;
    for (size_t i = 0; i < m_list.size(); ++i) {
        const int m = m_list[i];
        const MomentReport direct =
            moment(shape, params, 2 * m, MomentPath::scaled);

        Complex paper_sum{0.0, 0.0};
        Complex refined_sum{0.0, 0.0};
        for (const PhasePoint& p : maximizers) {
            const AsymptoticPrediction pred = predict_moment(shape, params, m, p);
            // Re-base each contribution onto the direct report's log scale;
            // the exponents agree to rounding, so this factor is ~1.
            const double rebase = std::exp(pred.log_main - direct.log_scale);
            paper_sum += pred.oriented_amplitude(false) * rebase;
            refined_sum += pred.oriented_amplitude(true) * rebase;
        }

        MomentComparisonRow row;
        row.m = m;
        row.direct_log_abs = direct.log_abs();
        row.predicted_log_abs = direct.log_scale + std::log(std::abs(paper_sum));
        row.ratio = direct.scaled_value / paper_sum;
        row.ratio_refined = direct.scaled_value / refined_sum;
        row.direct_error_estimate = direct.error_estimate;
        row.flagged =
            direct.error_estimate > 0.01 * std::abs(direct.scaled_value);
        out.rows.push_back(row);

        const double r = std::abs(row.ratio);
        if (i == 0) {
            abs_min = abs_max = r;
        } else {
            abs_min = std::min(abs_min, r);
            abs_max = std::max(abs_max, r);
        }
        if (i + 1 == m_list.size()) {
            out.paper_vs_refined_factor = std::abs(refined_sum) / std::abs(paper_sum);
        }
    }
    out.ratio_abs_variation = abs_max / abs_min - 1.0;
    return out;
}

}  // namespace pomlab
