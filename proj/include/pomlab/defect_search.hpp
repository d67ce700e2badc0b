#ifndef POMLAB_DEFECT_SEARCH_HPP
#define POMLAB_DEFECT_SEARCH_HPP

#include <vector>

#include "pomlab/pompeiu.hpp"
#include "pomlab/star_shape.hpp"

namespace pomlab {

/// Direction-averaged squared indicator transform,
///
///   (1/2pi) int |indicator_transform(shape, k, alpha(theta))|^2 dtheta,
///
/// evaluated on a fused theta/phi trapezoid grid (theta nodes >= 128,
/// doubled with phi until the estimate meets params.tol). Zero exactly
/// when the domain carries a nontrivial null function at wavenumber k.
double direction_defect(const StarShape& shape, const PompeiuParams& params,
                        int min_theta_nodes = 128);

struct DefectReport {
    struct TracePoint {
        long evaluation = 0;   // objective evaluations consumed so far
        double defect = 0.0;
        double k = 0.0;
        std::vector<double> coeffs;  // a_1..a_M then b_1..b_M
    };

    StarShape shape;
    double k = 0.0;
    double defect = 0.0;
    std::vector<TracePoint> trace;  // defect non-increasing along the trace
    bool converged = false;
    long evaluations = 0;

    DefectReport() : shape(StarShape::disc(1.0)) {}
};

/// Minimizes direction_defect over the shape coefficients and k at fixed
/// mean radius by Nelder-Mead with a fixed three-stage restart schedule.
/// The mean radius removes the dilation degeneracy and the first-harmonic
/// coefficients stay frozen at their initial values to remove the
/// translation one (a shifted ball is still a ball; the defect is flat
/// along that family). Deterministic: identical inputs give bit-identical
/// traces. Converged means the final simplex diameter fell below 1e-8.
/// max_order <= 6, budget <= 1e5 objective evaluations.
DefectReport minimize_defect(const StarShape& initial, double k_init,
                             int max_order, long budget);

}  // namespace pomlab

#endif
