#include "pomlab/defect_search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace pomlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Real-direction radial factor, split into components so the theta sweep
// stays free of complex arithmetic: G(c, F) with u = c F,
//   re = (cos u + u sin u - 1) / c^2,  im = (sin u - u cos u) / c^2,
// series below |u| = 1e-3.
inline void radial_factor_real(double c, double F, double& re, double& im) {
    const double u = c * F;
    if (std::abs(u) < 1e-3) {
        const double u2 = u * u;
        const double f2 = F * F;
        re = f2 * (0.5 - u2 / 8.0 + u2 * u2 / 144.0);
        im = f2 * u * (1.0 / 3.0 - u2 / 30.0 + u2 * u2 / 840.0);
        return;
    }
    const double s = std::sin(u);
    const double cn = std::cos(u);
    const double c2 = c * c;
    re = (cn + u * s - 1.0) / c2;
    im = (s - u * cn) / c2;
}

// One level of the fused theta/phi trapezoid evaluation of
// (1/2pi) int |int_D e^{i k alpha(theta) . x} dx|^2 dtheta with n nodes in
// both angles. Both grids share the spacing, so cos(phi_j - theta_i) comes
// from one table.
double defect_level(const StarShape& shape, double k, int n) {
    std::vector<double> f(n), ct(n);
    for (int j = 0; j < n; ++j) {
        f[j] = shape.eval(-kPi + 2.0 * kPi * j / n);
        ct[j] = std::cos(2.0 * kPi * j / n);
    }
    const double dphi = 2.0 * kPi / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double sum_re = 0.0, sum_im = 0.0;
        for (int j = 0; j < n; ++j) {
            const int d = j - i;
            double re, im;
            radial_factor_real(k * ct[d < 0 ? d + n : d], f[j], re, im);
            sum_re += re;
            sum_im += im;
        }
        acc += (sum_re * sum_re + sum_im * sum_im) * (dphi * dphi);
    }
    return acc / n;
}

}  // namespace

double direction_defect(const StarShape& shape, const PompeiuParams& params,
                        int min_theta_nodes) {
    int n = std::max(128, min_theta_nodes);
    double prev = defect_level(shape, params.k, n);
    while (true) {
        n *= 2;
        const double curr = defect_level(shape, params.k, n);
        const double est = std::abs(curr - prev);
        if (est <= params.tol) return curr;
        if (n >= 8192) {
            std::ostringstream msg;
            msg << "direction_defect: not converged, estimate " << est
                << " at " << n << " nodes";
            throw convergence_error(msg.str());
        }
        prev = curr;
    }
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The first-harmonic coefficients stay frozen at their initial values: to
// leading order they translate the domain, and the defect is flat along
// translations (a shifted disc is still a ball), so releasing them lets
// the minimizer drift sideways instead of contracting the shape. The
// optimization vector is therefore a_2..a_M, b_2..b_M, k.
struct SearchSpace {
    double mean_radius;
    int order;  // M
    double a1, b1;

    int dim() const { return order >= 1 ? 2 * (order - 1) + 1 : 1; }
    int free_coeffs() const { return order >= 1 ? 2 * (order - 1) : 0; }

    bool feasible(const std::vector<double>& x) const {
        const double k = x.back();
        if (!(k > 0.05) || !(k < 100.0)) return false;
        double sum = std::abs(a1) + std::abs(b1);
        for (int i = 0; i < free_coeffs(); ++i) sum += std::abs(x[static_cast<size_t>(i)]);
        return sum < mean_radius * (1.0 - 1e-12);
    }

    StarShape make_shape(const std::vector<double>& x) const {
        std::vector<double> a, b;
        if (order >= 1) {
            const int m = order - 1;
            a.push_back(a1);
            a.insert(a.end(), x.begin(), x.begin() + m);
            b.push_back(b1);
            b.insert(b.end(), x.begin() + m, x.begin() + 2 * m);
        }
        return StarShape(mean_radius, std::move(a), std::move(b));
    }
};

double simplex_diameter(const std::vector<std::vector<double>>& pts) {
    double d = 0.0;
    for (size_t i = 1; i < pts.size(); ++i) {
        for (size_t c = 0; c < pts[i].size(); ++c) {
            d = std::max(d, std::abs(pts[i][c] - pts[0][c]));
        }
    }
    return d;
}

}  // namespace

DefectReport minimize_defect(const StarShape& initial, double k_init,
                             int max_order, long budget) {
    if (max_order < 0 || max_order > 6) {
        throw std::invalid_argument("minimize_defect: max_order must be in 0..6");
    }
    if (budget < 1 || budget > 100000) {
        throw std::invalid_argument("minimize_defect: budget must be in 1..1e5");
    }
    if (!(k_init > 0.0)) {
        throw std::invalid_argument("minimize_defect: k_init must be positive");
    }
    if (initial.order() > max_order) {
        throw std::invalid_argument(
            "minimize_defect: initial shape order exceeds max_order");
    }

    SearchSpace space{initial.mean_radius(), max_order, 0.0, 0.0};
    if (initial.order() >= 1) {
        space.a1 = initial.cos_coeffs()[0];
        space.b1 = initial.sin_coeffs()[0];
    }
    const int d = space.dim();

    DefectReport report;
    long evals = 0;
    auto objective = [&](const std::vector<double>& x) {
        if (!space.feasible(x)) return kInf;
        ++evals;
        return direction_defect(space.make_shape(x), PompeiuParams(x.back(), 1e-12));
    };

    std::vector<double> best(static_cast<size_t>(d), 0.0);
    for (int i = 1; i < initial.order(); ++i) {
        best[static_cast<size_t>(i - 1)] = initial.cos_coeffs()[static_cast<size_t>(i)];
        best[static_cast<size_t>(max_order - 1 + i - 1)] =
            initial.sin_coeffs()[static_cast<size_t>(i)];
    }
    best.back() = k_init;
    double best_val = objective(best);

    auto record = [&](double val, const std::vector<double>& x) {
        DefectReport::TracePoint tp;
        tp.evaluation = evals;
        tp.defect = val;
        tp.k = x.back();
        const StarShape shape = space.make_shape(x);
        tp.coeffs = shape.cos_coeffs();
        tp.coeffs.insert(tp.coeffs.end(), shape.sin_coeffs().begin(),
                         shape.sin_coeffs().end());
        report.trace.push_back(std::move(tp));
    };
    record(best_val, best);

    // Fixed three-stage restart schedule: each pass rebuilds the simplex
    // around the incumbent with a smaller step.
    const double steps[3] = {0.05, 5e-3, 5e-4};
    bool converged = false;

    for (double step : steps) {
        if (evals >= budget) break;

        std::vector<std::vector<double>> pts(static_cast<size_t>(d) + 1, best);
        std::vector<double> vals(static_cast<size_t>(d) + 1, kInf);
        vals[0] = best_val;
        for (int i = 0; i < d; ++i) {
            pts[static_cast<size_t>(i) + 1][static_cast<size_t>(i)] += step;
            vals[static_cast<size_t>(i) + 1] = objective(pts[static_cast<size_t>(i) + 1]);
            if (evals >= budget) break;
        }

        converged = false;
        while (evals < budget) {
            // ascending by value; stable so ties keep insertion order
            std::vector<size_t> idx(pts.size());
            for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
            std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
                return vals[a] < vals[b];
            });
            std::vector<std::vector<double>> spts(pts.size());
            std::vector<double> svals(pts.size());
            for (size_t i = 0; i < idx.size(); ++i) {
                spts[i] = pts[idx[i]];
                svals[i] = vals[idx[i]];
            }
            pts.swap(spts);
            vals.swap(svals);

            if (vals[0] < best_val) {
                best_val = vals[0];
                best = pts[0];
                record(best_val, best);
            }
            if (simplex_diameter(pts) < 1e-8) {
                converged = true;
                break;
            }

            std::vector<double> centroid(static_cast<size_t>(d), 0.0);
            for (int i = 0; i < d; ++i) {
                for (int c = 0; c < d; ++c) centroid[static_cast<size_t>(c)] += pts[static_cast<size_t>(i)][static_cast<size_t>(c)];
            }
            for (double& c : centroid) c /= d;

            auto blend = [&](double t) {
                std::vector<double> x(static_cast<size_t>(d));
                for (int c = 0; c < d; ++c) {
                    x[static_cast<size_t>(c)] = centroid[static_cast<size_t>(c)] +
                        t * (centroid[static_cast<size_t>(c)] - pts.back()[static_cast<size_t>(c)]);
                }
                return x;
            };

            const std::vector<double> xr = blend(1.0);  // reflection
            const double fr = objective(xr);
            if (fr < vals[0]) {
                const std::vector<double> xe = blend(2.0);  // expansion
                const double fe = objective(xe);
                if (fe < fr) {
                    pts.back() = xe;
                    vals.back() = fe;
                } else {
                    pts.back() = xr;
                    vals.back() = fr;
                }
            } else if (fr < vals[vals.size() - 2]) {
                pts.back() = xr;
                vals.back() = fr;
            } else {
                const bool outside = fr < vals.back();
                const std::vector<double> xc = blend(outside ? 0.5 : -0.5);
                const double fc = objective(xc);
                if (fc < std::min(fr, vals.back())) {
                    pts.back() = xc;
                    vals.back() = fc;
                } else {
                    // shrink toward the incumbent
                    for (size_t i = 1; i < pts.size(); ++i) {
                        for (int c = 0; c < d; ++c) {
                            pts[i][static_cast<size_t>(c)] =
                                pts[0][static_cast<size_t>(c)] +
                                0.5 * (pts[i][static_cast<size_t>(c)] - pts[0][static_cast<size_t>(c)]);
                        }
                        vals[i] = objective(pts[i]);
                        if (evals >= budget) break;
                    }
                }
            }
        }

        // pick up an improvement made on the very last iteration
        for (size_t i = 0; i < pts.size(); ++i) {
            if (vals[i] < best_val) {
                best_val = vals[i];
                best = pts[i];
                record(best_val, best);
            }
        }
    }

    report.shape = space.make_shape(best);
    report.k = best.back();
    report.defect = best_val;
    report.converged = converged;
    report.evaluations = evals;
    return report;
}

}  // namespace pomlab
