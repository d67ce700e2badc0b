#ifndef POMLAB_POMPEIU_HPP
#define POMLAB_POMPEIU_HPP

#include <complex>
#include <vector>

#include "pomlab/quadrature.hpp"
#include "pomlab/star_shape.hpp"

namespace pomlab {

/// Wavenumber and tolerance shared by the Pompeiu functionals.
struct PompeiuParams {
    double k;
    double tol;

    explicit PompeiuParams(double k, double tol = 1e-12);
};

/// A direction alpha on the complex quadric {z in C^2 : z1^2 + z2^2 = 1}.
/// Real unit vectors (cos theta, sin theta) are the real section; the
/// one-parameter family (i s, sqrt(s^2 + 1)) reaches the complex branch
/// used by the weighted moments.
class ComplexDirection {
public:
    ComplexDirection(Complex alpha1, Complex alpha2);

    static ComplexDirection from_angle(double theta);
    static ComplexDirection from_complex_angle(Complex theta);
    static ComplexDirection from_s(double s);  // (i s, sqrt(s^2 + 1))

    Complex alpha1() const { return a1_; }
    Complex alpha2() const { return a2_; }

    /// |alpha1^2 + alpha2^2 - 1|, accumulated in extended precision.
    double variety_residual() const;

private:
    Complex a1_, a2_;
};

/// The complex angle theta with cos(theta) = i s, sin(theta) = sqrt(s^2+1):
/// theta = pi/2 - i asinh(s).
Complex complex_angle_from_s(double s);

/// Fourier transform of the set indicator of D at frequency k alpha,
///   integral over D of exp(i k alpha . x) dx,
/// reduced to one periodic phi-integral via the closed-form radial integral
///   int_0^F rho e^{i c rho} drho = (e^{i c F}(1 - i c F) - 1) / c^2,
/// with a series switch-over for |c F| < 1e-3.
Complex indicator_transform(const StarShape& shape, const PompeiuParams& params,
                            const ComplexDirection& dir);

/// Same integral with the quadrature diagnostics attached.
QuadratureResult indicator_transform_full(const StarShape& shape,
                                          const PompeiuParams& params,
                                          const ComplexDirection& dir);

/// Integral of exp(i k beta . x) over the moved domain sigma(D).
/// Evaluated through the change of variables exp(i k beta . t) *
/// indicator_transform(R^{-1} beta) and cross-checked against direct
/// quadrature over the moved domain; disagreement beyond 10 * tol raises
/// convergence_error.
Complex pompeiu_integral(const StarShape& shape, const PompeiuParams& params,
                         const Vec2& beta, const RigidMotion& motion);

/// Boundary moment integral over one period,
///   int f'(phi) f(phi) exp(i k f(phi) cos(phi - theta)) dphi,
/// with theta complex in general.
Complex boundary_moment(const StarShape& shape, const PompeiuParams& params,
                        Complex theta);

/// int_0^inf exp(-s(a + A) + i sqrt(s^2 + 1) b) ds. Requires A > |a|.
Complex inner_s_integral(double a, double b, double A, double tol = 1e-12);

/// max over phi of |a(phi)| with a = k f cos(phi), by dense sampling plus
/// one Newton polish. Every admissible weight A must exceed this value.
double max_abs_a(const StarShape& shape, double k);

/// Exponentially weighted double integral
///   int f' f [ int_0^inf exp(-s(a + A) + i sqrt(s^2+1) b) ds ] dphi,
/// a = k f cos(phi), b = k f sin(phi). Requires A > max|a|.
Complex laplace_weighted(const StarShape& shape, const PompeiuParams& params,
                         double A);

/// One boundary moment I_j = int f' f a^j e^{i b} dphi in log-scaled form.
/// value = scaled_value * exp(log_scale); log_scale is 0 for j <= 20.
/// error_estimate is relative to the integrand's peak scale (max(1, amax^j)
/// on the direct path), which coincides with the absolute estimate whenever
/// that scale is 1.
struct MomentReport {
    int j = 0;
    double log_scale = 0.0;
    Complex scaled_value{0.0, 0.0};
    double error_estimate = 0.0;

    Complex value() const;   // rehydrated; only safe for moderate log_scale
    double log_abs() const;  // log_scale + log|scaled_value|
};

enum class MomentPath {
    automatic,  // direct for j <= 20, log-scaled beyond
    direct,
    scaled,
};

/// Moment I_j. The log-scaled path writes a^{2m} = exp(m Psi) with
/// Psi = ln(k^2 f^2 cos^2 phi) and subtracts m Psi* so the integrand
/// never exceeds the largest |a| in magnitude; odd j keeps one factor of
/// a outside the exponential to carry the sign. Overflow cannot occur.
MomentReport moment(const StarShape& shape, const PompeiuParams& params, int j,
                    MomentPath path = MomentPath::automatic);

struct ExtractionResult {
    std::vector<Complex> moments;     // I_0 .. I_{j_max}
    std::vector<Complex> raw_coeffs;  // fitted coefficients u_l = (-1)^l I_l
    double residual = 0.0;            // least-squares residual norm
    double max_abs_w = 0.0;           // max |W(A)| over the grid
};

/// Recovers I_0..I_{j_max} from samples of W(A) = laplace_weighted(A) by a
/// least-squares fit to sum_l (-1)^l I_l A^{-1-l} (orthogonal
/// factorization on column-scaled monomials). The grid needs at least
/// j_max + 3 points spanning two decades, all above max|a|.
ExtractionResult extract_moments(const StarShape& shape,
                                 const PompeiuParams& params, int j_max,
                                 const std::vector<double>& A_grid);

}  // namespace pomlab

#endif
