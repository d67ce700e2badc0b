#ifndef POMLAB_ASYMPTOTICS_HPP
#define POMLAB_ASYMPTOTICS_HPP

#include <complex>
#include <vector>

#include "pomlab/pompeiu.hpp"
#include "pomlab/star_shape.hpp"

namespace pomlab {

/// Log-magnitude of the even-moment weight, Psi = ln(k^2 f^2 cos^2 phi).
/// Rejects phi within 1e-12 of +-pi/2 where cos vanishes.
double psi(const StarShape& shape, const PompeiuParams& params, double phi);

/// Psi' = 2 f'/f - 2 tan(phi).
double psi_deriv1(const StarShape& shape, const PompeiuParams& params, double phi);

/// Psi'' = 2 (f''/f - (f'/f)^2) - 2 / cos^2(phi).
double psi_deriv2(const StarShape& shape, const PompeiuParams& params, double phi);

/// A solution of the stationary equation f'/f - tan(phi) = 0 with the
/// local data the saddle-point expansion needs.
struct PhasePoint {
    double phi = 0.0;        // stationary point in [-pi, pi)
    double psi_value = 0.0;  // Psi(phi)
    double gamma = 0.0;      // |Psi''(phi)|
    double f0 = 0.0;         // f(phi)
    double f2 = 0.0;         // f''(phi)
    double f3 = 0.0;         // f'''(phi)
    bool degenerate = false; // |Psi''(phi)| < 1e-8
};

/// All stationary points of Psi on one period, found by a sign-change scan
/// of Psi' on an 8192-point grid (1e-6 guard bands around +-pi/2), refined
/// by bisection and Newton to residual <= 1e-12. Sorted by descending
/// psi_value.
std::vector<PhasePoint> stationary_points(const StarShape& shape,
                                          const PompeiuParams& params);

/// Saddle-point main term for I_{2m} contributed by one non-degenerate
/// maximizer:
///
///   I_{2m} ~ e^{m Psi(phi*)} * amplitude,
///   amplitude = Gamma(3/2)/(m gamma)^{3/2} (i k f0^2 f2 + f0 f3 / 2),
///
/// written for the shape rotated so phi* sits at the origin. The refined
/// amplitude carries the full quadratic expansion of the exponent, which
/// rescales the Gaussian width by 2^{3/2} and couples Psi''' to the odd
/// part of the prefactor:
///
///   amplitude_refined = Gamma(3/2) (2/(m gamma))^{3/2}
///                       (i k f0^2 f2 + f0 f3 / 2 + f2 f3 / gamma).
struct AsymptoticPrediction {
    int m = 0;
    double log_main = 0.0;           // m * psi_value of the governing point
    Complex amplitude{0.0, 0.0};
    Complex amplitude_refined{0.0, 0.0};
    double origin_shift = 0.0;       // the phi* rotated to the origin

    /// Contribution to the moment integral in the original parametrization.
    /// A maximizer aligned at phi* = pi enters with the sign of
    /// b = k f sin(phi) reversed, which conjugates the amplitude.
    Complex oriented_amplitude(bool refined) const;
};

/// Requires a non-degenerate point with f'(phi*) = 0 (a maximizer of f
/// aligned with the cos^2 weight, the only case where the main term above
/// is the leading order).
AsymptoticPrediction predict_moment(const StarShape& shape,
                                    const PompeiuParams& params, int m,
                                    const PhasePoint& point);

struct MomentComparisonRow {
    int m = 0;
    double direct_log_abs = 0.0;     // log|I_{2m}| from quadrature
    double predicted_log_abs = 0.0;  // log of the summed main-term modulus
    Complex ratio{0.0, 0.0};         // direct / predicted
    Complex ratio_refined{0.0, 0.0}; // direct / refined prediction
    double direct_error_estimate = 0.0;
    bool flagged = false;  // direct error estimate above 1% of magnitude
};

struct AsymptoticsComparison {
    std::vector<MomentComparisonRow> rows;
    int maximizer_count = 0;
    double ratio_abs_variation = 0.0;     // max/min - 1 of |ratio| over rows
    double paper_vs_refined_factor = 0.0; // |refined sum| / |main-term sum|
};

/// Confronts the direct log-scaled I_{2m} with the summed saddle-point
/// predictions over all non-degenerate global maximizers, for each m in
/// m_list. Rejects discs (both sides vanish identically).
AsymptoticsComparison compare_asymptotics(const StarShape& shape,
                                          const PompeiuParams& params,
                                          const std::vector<int>& m_list);

}  // namespace pomlab

#endif
