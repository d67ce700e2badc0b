#ifndef POMLAB_QUADRATURE_HPP
#define POMLAB_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pomlab {

using Complex = std::complex<double>;

/// Thrown when a doubling sequence hits its node cap with the error
/// estimate still above the requested tolerance.
class convergence_error : public std::runtime_error {
public:
    explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error_estimate = 0.0;  // |I_{2N} - I_N| of the final doubling step
    int nodes_used = 0;
};

/// One pass of the N-node trapezoid rule for a 2pi-periodic integrand,
/// nodes phi_j = -pi + 2 pi j / N. Exact for trigonometric monomials of
/// degree < N.
Complex periodic_trapezoid(const std::function<Complex(double)>& g, int nodes);

/// Integral of a smooth 2pi-periodic integrand over one period.
/// Node doubling from base_nodes until |I_{2N} - I_N| <= tol; the node
/// cap is 2^20. Spectrally accurate for analytic integrands.
QuadratureResult periodic_integral(const std::function<Complex(double)>& g,
                                   double tol, int base_nodes = 64);

/// Integral over [0, inf) of an integrand bounded by C exp(-decay_rate s).
/// The domain is truncated where the sampled envelope falls below tol and
/// covered by composite 16-point Gauss-Legendre panels, doubled until the
/// estimate meets tol. s_max_override > 0 replaces the automatic
/// truncation point.
QuadratureResult halfline_integral(const std::function<Complex(double)>& g,
                                   double decay_rate, double tol,
                                   double s_max_override = 0.0);

struct GaussLegendreRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;
};

/// Nodes and weights by Newton iteration on the Legendre recurrence.
const GaussLegendreRule& gauss_legendre_rule(int n);

}  // namespace pomlab

#endif
