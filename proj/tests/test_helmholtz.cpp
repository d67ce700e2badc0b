#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pomlab/bessel.hpp"
#include "pomlab/helmholtz_bvp.hpp"
#include "pomlab/pompeiu.hpp"

using namespace pomlab;

TEST_SUITE("helmholtz_bvp") {

TEST_CASE("closed form satisfies the boundary condition exactly") {
    for (double k : {2.0, bessel_j1_zero(1).value}) {
        const RadialSolution sol = disc_overdetermined(1.0, k);
        CHECK(std::abs(sol.u(1.0)) <= 1e-14);
    }
}

TEST_CASE("Neumann defect vanishes exactly at a J1 zero") {
    const double z1 = bessel_j1_zero(1).value;
    CHECK(disc_overdetermined(1.0, z1).neumann_defect() <= 1e-10);

    // away from the zero the defect is the closed-form ratio
    const RadialSolution sol = disc_overdetermined(1.0, 2.0);
    const double expect = oracles::bessel_series(1, 2.0) /
                          (2.0 * std::abs(oracles::bessel_series(0, 2.0)));
    CHECK(sol.neumann_defect() == doctest::Approx(expect).epsilon(1e-12));
    CHECK(sol.neumann_defect() > 0.1);
}

TEST_CASE("center value") {
    const RadialSolution sol = disc_overdetermined(1.0, 2.0);
    const double j0 = oracles::bessel_series(0, 2.0);
    CHECK(sol.u(0.0) == doctest::Approx((1.0 - 1.0 / j0) / 4.0).epsilon(1e-12));
}

TEST_CASE("closed form rejects J0 zeros") {
    CHECK_THROWS_AS(disc_overdetermined(1.0, 2.404825557695773), std::invalid_argument);
    CHECK_THROWS_AS(disc_overdetermined(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("finite-difference residual is second order") {
    const RadialSolution sol = disc_overdetermined(1.0, bessel_j1_zero(1).value);
    const double r1 = residual_check(sol, 1e-3);
    CHECK(r1 <= 1e-5);
    const double r2 = residual_check(sol, 5e-4);
    CHECK(r1 / r2 > 4.0 * 0.7);
    CHECK(r1 / r2 < 4.0 * 1.3);
    CHECK_THROWS_AS(residual_check(sol, 0.5), std::invalid_argument);
}

TEST_CASE("constant profile solves the equation with the Bessel part removed") {
    const double k = 2.0;
    const double resid = radial_pde_residual(
        [k](double) { return 1.0 / (k * k); }, k, 1.0, 1e-3);
    CHECK(resid <= 1e-15);
}

TEST_CASE("Neumann eigen-disc wavenumbers") {
    const NeumannEigenDisc e1 = neumann_eigen_disc(1.0, 1);
    CHECK(std::abs(e1.k * bessel_j(1, e1.k)) <= 1e-11);  // |u_r(R)| for u = J0(kr)
    CHECK(std::abs(e1.boundary_value) > 0.3);

    const NeumannEigenDisc e2 = neumann_eigen_disc(2.0, 1);
    CHECK(e2.k == doctest::Approx(e1.k / 2.0).epsilon(1e-14));
    CHECK(e2.boundary_value == doctest::Approx(e1.boundary_value).epsilon(1e-12));
}

TEST_CASE("Trefftz fit reproduces the disc closed form") {
    const double z1 = bessel_j1_zero(1).value;
    const StarShape disc = StarShape::disc(1.0);

    const TrefftzSolution at_zero = trefftz_defect(disc, z1, 8, 48);
    CHECK(at_zero.boundary_residual <= 1e-10);
    CHECK(at_zero.neumann_defect <= 1e-8);
    // only the radial mode participates
    for (int n = -8; n <= 8; ++n) {
        if (n != 0) CHECK(std::abs(at_zero.coeff(n)) <= 1e-10 * std::abs(at_zero.coeff(0)));
    }

    const TrefftzSolution off_zero = trefftz_defect(disc, 2.0, 8, 48);
    CHECK(off_zero.boundary_residual <= 1e-10);
    const double closed = disc_overdetermined(1.0, 2.0).neumann_defect() *
                          std::sqrt(2.0 * oracles::pi);
    CHECK(std::abs(off_zero.neumann_defect - closed) <= 1e-6);
}

TEST_CASE("defect is stable in the expansion order") {
    // a strong second harmonic needs a deep expansion before the boundary
    // fit clears the 1e-6 gate; the defect itself settles much earlier
    const StarShape s(1.0, {0.0, 0.2}, {});
    const TrefftzSolution n32 = trefftz_defect(s, 3.9, 32, 144);
    const TrefftzSolution n40 = trefftz_defect(s, 3.9, 40, 176);
    CHECK(std::abs(n32.neumann_defect - n40.neumann_defect) <=
          0.01 * n40.neumann_defect);

    const StarShape gentle(1.0, {0.0, 0.04}, {});
    const TrefftzSolution n8 = trefftz_defect(gentle, 3.9, 8, 48);
    const TrefftzSolution n16 = trefftz_defect(gentle, 3.9, 16, 80);
    CHECK(std::abs(n8.neumann_defect - n16.neumann_defect) <=
          0.01 * n16.neumann_defect);
}

TEST_CASE("even shapes give symmetric coefficients") {
    const StarShape s(1.0, {0.05, 0.08}, {});
    const TrefftzSolution sol = trefftz_defect(s, 3.0, 16, 80);
    double cmax = 0.0;
    for (const Complex& c : sol.coeffs) cmax = std::max(cmax, std::abs(c));
    // the top harmonics sit below their unscaling noise floor (column norms
    // ~J_n(kf) are tiny there), so symmetry is asserted on the identifiable
    // lower half
    for (int n = 1; n <= 8; ++n) {
        CHECK(std::abs(sol.coeff(n) - sol.coeff(-n)) <= 1e-10 * cmax);
    }
}

TEST_CASE("non-disc shapes keep a large defect across the zero") {
    const double z1 = bessel_j1_zero(1).value;
    const StarShape s(1.0, {0.0, 0.2}, {});
    const double disc_defect = trefftz_defect(StarShape::disc(1.0), z1, 8, 48).neumann_defect;
    double lo = 1e300;
    for (int i = 0; i <= 10; ++i) {
        const double k = z1 - 0.5 + i / 10.0;
        lo = std::min(lo, trefftz_defect(s, k, 40, 176).neumann_defect);
    }
    CHECK(lo >= 1e3 * std::max(disc_defect, 1e-14));
}

TEST_CASE("both sides of the solvability equivalence vanish together") {
    // at the disc's null wavenumber the transform and the Neumann defect
    // are simultaneously zero
    const double z1 = bessel_j1_zero(1).value;
    const StarShape disc = StarShape::disc(1.0);
    const Complex ft = indicator_transform(disc, PompeiuParams(z1),
                                           ComplexDirection::from_angle(0.25));
    CHECK(std::abs(ft) <= 1e-9);
    CHECK(trefftz_defect(disc, z1, 8, 48).neumann_defect <= 1e-8);
}

TEST_CASE("collocation count guard") {
    CHECK_THROWS_AS(trefftz_defect(StarShape::disc(1.0), 2.0, 8, 40),
                    std::invalid_argument);
    CHECK_THROWS_AS(trefftz_defect(StarShape::disc(1.0), -1.0, 8, 48),
                    std::invalid_argument);
}

}  // TEST_SUITE
