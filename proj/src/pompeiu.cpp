#include "pomlab/pompeiu.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pomlab {

namespace {

constexpr double kPi = std::numbers::pi;
using namespace std::complex_literals;

// Radial factor of the indicator transform:
//   G(c, F) = int_0^F rho e^{i c rho} drho = (e^{i c F}(1 - i c F) - 1) / c^2,
// with the removable singularity at c = 0 handled by the series
//   G = F^2 sum_{n>=0} (i c F)^n / (n! (n + 2)),
// six terms of which are exact to ~1e-18 for |c F| < 1e-3.
Complex radial_factor(Complex c, double F) {
    const Complex u = c * F;
    if (std::abs(u) < 1e-3) {
        const Complex iu = 1i * u;
        Complex term{1.0, 0.0};
        Complex sum = term / 2.0;
        double fact = 1.0;
        for (int n = 1; n <= 5; ++n) {
            term *= iu;
            fact *= n;
            sum += term / (fact * (n + 2));
        }
        return F * F * sum;
    }
    return (std::exp(1i * u) * (1.0 - 1i * u) - 1.0) / (c * c);
}

}  // namespace

PompeiuParams::PompeiuParams(double k_, double tol_) : k(k_), tol(tol_) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw std::invalid_argument("PompeiuParams: k must be positive");
    }
    if (!(tol >= 1e-14 && tol <= 1e-6)) {
        throw std::invalid_argument("PompeiuParams: tol must be in [1e-14, 1e-6]");
    }
}

ComplexDirection::ComplexDirection(Complex alpha1, Complex alpha2)
    : a1_(alpha1), a2_(alpha2) {
    if (variety_residual() > 1e-12) {
        throw std::invalid_argument(
            "ComplexDirection: alpha1^2 + alpha2^2 must equal 1");
    }
}

ComplexDirection ComplexDirection::from_angle(double theta) {
    return ComplexDirection(Complex(std::cos(theta), 0.0),
                            Complex(std::sin(theta), 0.0));
}

ComplexDirection ComplexDirection::from_complex_angle(Complex theta) {
    return ComplexDirection(std::cos(theta), std::sin(theta));
}

ComplexDirection ComplexDirection::from_s(double s) {
    return ComplexDirection(Complex(0.0, s), Complex(std::sqrt(s * s + 1.0), 0.0));
}

double ComplexDirection::variety_residual() const {
    // Accumulate in extended precision so the residual of a correctly
    // rounded sqrt(s^2+1) stays below 1e-15.
    const long double re1 = a1_.real(), im1 = a1_.imag();
    const long double re2 = a2_.real(), im2 = a2_.imag();
    const long double rr = re1 * re1 - im1 * im1 + re2 * re2 - im2 * im2 - 1.0L;
    const long double ri = 2.0L * (re1 * im1 + re2 * im2);
    return static_cast<double>(std::sqrt(rr * rr + ri * ri));
}

Complex complex_angle_from_s(double s) {
    return Complex(kPi / 2.0, -std::asinh(s));
}

QuadratureResult indicator_transform_full(const StarShape& shape,
                                          const PompeiuParams& params,
                                          const ComplexDirection& dir) {
    const Complex a1 = dir.alpha1();
    const Complex a2 = dir.alpha2();
    const double k = params.k;
    auto integrand = [&](double phi) {
        const Complex c = k * (a1 * std::cos(phi) + a2 * std::sin(phi));
        return radial_factor(c, shape.eval(phi));
    };
    return periodic_integral(integrand, params.tol);
}

Complex indicator_transform(const StarShape& shape, const PompeiuParams& params,
                            const ComplexDirection& dir) {
    return indicator_transform_full(shape, params, dir).value;
}

Complex pompeiu_integral(const StarShape& shape, const PompeiuParams& params,
                         const Vec2& beta, const RigidMotion& motion) {
    const double norm = std::hypot(beta[0], beta[1]);
    if (std::abs(norm - 1.0) > 1e-9) {
        throw std::invalid_argument("pompeiu_integral: beta must be a unit vector");
    }
    const double k = params.k;
    const double cw = std::cos(motion.rotation);
    const double sw = std::sin(motion.rotation);
    const Complex phase =
        std::exp(1i * (k * (beta[0] * motion.translation[0] +
                            beta[1] * motion.translation[1])));

    // (a) change of variables: pull the motion back onto the direction.
    const Vec2 back{cw * beta[0] + sw * beta[1], -sw * beta[0] + cw * beta[1]};
    const Complex via_transform =
        phase * indicator_transform(
                    shape, params,
                    ComplexDirection(Complex(back[0], 0.0), Complex(back[1], 0.0)));

    // (b) quadrature over the moved domain, polar about the moved origin:
    // the boundary of sigma(D) seen from sigma(0) is psi -> f(psi - rotation).
    auto integrand = [&](double psi) {
        const Complex c = Complex(k * (beta[0] * std::cos(psi) +
                                       beta[1] * std::sin(psi)), 0.0);
        return radial_factor(c, shape.eval(psi - motion.rotation));
    };
    const Complex direct = phase * periodic_integral(integrand, params.tol).value;

    if (std::abs(via_transform - direct) > 10.0 * params.tol) {
        std::ostringstream msg;
        msg << "pompeiu_integral: cross-check failed, routes differ by "
            << std::abs(via_transform - direct);
        throw convergence_error(msg.str());
    }
    return via_transform;
}

Complex boundary_moment(const StarShape& shape, const PompeiuParams& params,
                        Complex theta) {
    const double k = params.k;
    auto integrand = [&](double phi) {
        const double f = shape.eval(phi);
        const double fp = shape.eval(phi, 1);
        return fp * f * std::exp(1i * (k * f) * std::cos(Complex(phi) - theta));
    };
    return periodic_integral(integrand, params.tol).value;
}

Complex inner_s_integral(double a, double b, double A, double tol) {
    if (!(A > std::abs(a))) {
        throw std::invalid_argument("inner_s_integral: requires A > |a|");
    }
    const double lambda = a + A;
    auto g = [=](double s) {
        return std::exp(Complex(-s * lambda, b * std::sqrt(s * s + 1.0)));
    };
    return halfline_integral(g, lambda, tol).value;
}

double max_abs_a(const StarShape& shape, double k) {
    // Dense scan of |f cos(phi)| plus one Newton polish of the best sample
    // on w = (f cos)' = f' cos - f sin.
    const int n = 4096;
    double best = 0.0, best_phi = 0.0;
    for (int i = 0; i < n; ++i) {
        const double phi = -kPi + 2.0 * kPi * i / n;
        const double v = std::abs(shape.eval(phi) * std::cos(phi));
        if (v > best) {
            best = v;
            best_phi = phi;
        }
    }
    double phi = best_phi;
    const double w = shape.eval(phi, 1) * std::cos(phi) - shape.eval(phi) * std::sin(phi);
    const double dw = shape.eval(phi, 2) * std::cos(phi) -
                      2.0 * shape.eval(phi, 1) * std::sin(phi) -
                      shape.eval(phi) * std::cos(phi);
    if (std::abs(dw) > 1e-12) {
        const double polished = phi - w / dw;
        best = std::max(best, std::abs(shape.eval(polished) * std::cos(polished)));
    }
    return k * best;
}

Complex laplace_weighted(const StarShape& shape, const PompeiuParams& params,
                         double A) {
    const double a0 = max_abs_a(shape, params.k);
    if (!(A > a0)) {
        std::ostringstream msg;
        msg << "laplace_weighted: A = " << A << " must exceed max|a| = " << a0;
        throw std::invalid_argument(msg.str());
    }
    const double k = params.k;
    const double inner_tol = std::max(params.tol * 1e-2, 1e-14);
    auto integrand = [&](double phi) {
        const double f = shape.eval(phi);
        const double fp = shape.eval(phi, 1);
        if (fp == 0.0) return Complex(0.0, 0.0);
        const double a = k * f * std::cos(phi);
        const double b = k * f * std::sin(phi);
        return fp * f * inner_s_integral(a, b, A, inner_tol);
    };
    return periodic_integral(integrand, params.tol).value;
}

Complex MomentReport::value() const {
    return scaled_value * std::exp(log_scale);
}

double MomentReport::log_abs() const {
    return log_scale + std::log(std::abs(scaled_value));
}

MomentReport moment(const StarShape& shape, const PompeiuParams& params, int j,
                    MomentPath path) {
    if (j < 0 || j > 2000) {
        throw std::invalid_argument("moment: j must be in 0..2000");
    }
    const double k = params.k;
    const bool direct = (path == MomentPath::direct) ||
                        (path == MomentPath::automatic && j <= 20);

    MomentReport report;
    report.j = j;
    if (direct) {
        const double amax = max_abs_a(shape, k);
        if (amax > 0.0 && j * std::log(std::max(amax, 1.0)) > 700.0) {
            throw std::invalid_argument("moment: direct path would overflow; use the scaled path");
        }
        // The integrand peaks at ~amax^j, so the doubling tolerance (and the
        // reported estimate) are taken relative to that scale; an absolute
        // 1e-12 would sit below the rounding floor once amax^j is large.
        const double scale = std::max(1.0, std::pow(amax, j));
        auto integrand = [&](double phi) {
            const double f = shape.eval(phi);
            const double fp = shape.eval(phi, 1);
            const double a = k * f * std::cos(phi);
            const double b = k * f * std::sin(phi);
            return fp * f * std::pow(a, j) * std::exp(1i * b);
        };
        const QuadratureResult q = periodic_integral(integrand, params.tol * scale);
        report.log_scale = 0.0;
        report.scaled_value = q.value;
        report.error_estimate = q.error_estimate / scale;
        return report;
    }

    // Log-scaled path: a^{2m} = e^{m Psi} with the maximum of Psi taken
    // out, so the surviving factor (a/amax)^{2m} lies in [0, 1]; odd j
    // keeps a single signed factor of a outside.
    const int m = j / 2;  // floor; the leftover a covers odd j
    const double amax = max_abs_a(shape, k);
    report.log_scale = 2.0 * m * std::log(amax);
    const double scale = (j % 2 == 1) ? std::max(1.0, amax) : 1.0;
    auto integrand = [&](double phi) {
        const double f = shape.eval(phi);
        const double fp = shape.eval(phi, 1);
        const double a = k * f * std::cos(phi);
        const double b = k * f * std::sin(phi);
        const double ratio = a / amax;
        double w = std::pow(ratio * ratio, m);
        if (j % 2 == 1) w *= a;
        return fp * f * w * std::exp(1i * b);
    };
    const QuadratureResult q = periodic_integral(integrand, params.tol * scale);
    report.scaled_value = q.value;
    report.error_estimate = q.error_estimate / scale;
    return report;
}

ExtractionResult extract_moments(const StarShape& shape,
                                 const PompeiuParams& params, int j_max,
                                 const std::vector<double>& A_grid) {
    if (j_max < 0) throw std::invalid_argument("extract_moments: j_max must be >= 0");
    const int n = static_cast<int>(A_grid.size());
    if (n < j_max + 3) {
        throw std::invalid_argument(
            "extract_moments: A_grid needs at least j_max + 3 points");
    }
    double a_lo = A_grid.front(), a_hi = A_grid.front();
    for (double A : A_grid) {
        a_lo = std::min(a_lo, A);
        a_hi = std::max(a_hi, A);
    }
    if (!(a_hi >= 100.0 * a_lo)) {
        throw std::invalid_argument("extract_moments: A_grid must span two decades");
    }
    const double a0 = max_abs_a(shape, params.k);
    if (!(a_lo > a0)) {
        throw std::invalid_argument("extract_moments: every A must exceed max|a|");
    }

    Eigen::VectorXcd w(n);
    ExtractionResult result;
    for (int i = 0; i < n; ++i) {
        w(i) = laplace_weighted(shape, params, A_grid[i]);
        result.max_abs_w = std::max(result.max_abs_w, std::abs(w(i)));
    }

    // Column-scaled monomial design matrix X(i, l) = A_i^{-1-l}.
    Eigen::MatrixXcd x(n, j_max + 1);
    Eigen::VectorXd scale(j_max + 1);
    for (int l = 0; l <= j_max; ++l) {
        for (int i = 0; i < n; ++i) {
            x(i, l) = std::pow(A_grid[i], -1.0 - l);
        }
        scale(l) = x.col(l).norm();
        x.col(l) /= scale(l);
    }
    const Eigen::VectorXcd u_scaled = x.colPivHouseholderQr().solve(w);
    result.residual = (x * u_scaled - w).norm();

    result.raw_coeffs.resize(j_max + 1);
    result.moments.resize(j_max + 1);
    for (int l = 0; l <= j_max; ++l) {
        const Complex u = u_scaled(l) / scale(l);
        result.raw_coeffs[l] = u;
        result.moments[l] = (l % 2 == 0) ? u : -u;
    }

    if (result.residual > 1e-3 * std::max(result.max_abs_w, 1e-12)) {
        std::ostringstream msg;
        msg << "extract_moments: ill-conditioned fit, residual " << result.residual
            << " exceeds 1e-3 * max|W| = " << 1e-3 * result.max_abs_w;
        throw convergence_error(msg.str());
    }
    return result;
}

}  // namespace pomlab
