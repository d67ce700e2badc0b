#include "pomlab/helmholtz_bvp.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "pomlab/bessel.hpp"

namespace pomlab {

namespace {

constexpr double kPi = std::numbers::pi;
using namespace std::complex_literals;

// J'_n = (J_{n-1} - J_{n+1}) / 2 with J_{-1} = -J_1.
double bessel_j_deriv(int n, double x) {
    const double jm = (n == 0) ? -bessel_j(1, x) : bessel_j(n - 1, x);
    return 0.5 * (jm - bessel_j(n + 1, x));
}

}  // namespace

double RadialSolution::u(double r) const {
    return (1.0 - bessel_j(0, k * r) / bessel_j(0, k * R)) / (k * k);
}

double RadialSolution::du(double r) const {
    // J0' = -J1
    return bessel_j(1, k * r) / (k * bessel_j(0, k * R));
}

double RadialSolution::neumann_defect() const {
    return std::abs(du(R));
}

RadialSolution disc_overdetermined(double R, double k) {
    if (!(R > 0.0) || !(k > 0.0)) {
        throw std::invalid_argument("disc_overdetermined: R and k must be positive");
    }
    if (std::abs(bessel_j(0, k * R)) <= 1e-8) {
        throw std::invalid_argument(
            "disc_overdetermined: kR too close to a zero of J0, the closed "
            "form degenerates");
    }
    return RadialSolution{R, k};
}

double radial_pde_residual(const std::function<double(double)>& u, double k,
                           double R, double grid_step, double rhs) {
    if (!(grid_step > 0.0)) {
        throw std::invalid_argument("radial_pde_residual: grid_step must be > 0");
    }
    double worst = 0.0;
    const int n = static_cast<int>(std::floor(R / grid_step)) - 1;
    for (int i = 1; i <= n; ++i) {
        const double r = i * grid_step;
        const double um = u(r - grid_step);
        const double uc = u(r);
        const double up = u(r + grid_step);
        const double d1 = (up - um) / (2.0 * grid_step);
        const double d2 = (up - 2.0 * uc + um) / (grid_step * grid_step);
        worst = std::max(worst, std::abs(d2 + d1 / r + k * k * uc - rhs));
    }
    return worst;
}

double residual_check(const RadialSolution& solution, double grid_step) {
    if (!(grid_step <= 1e-2 * solution.R)) {
        throw std::invalid_argument("residual_check: grid_step must be <= R/100");
    }
    return radial_pde_residual([&](double r) { return solution.u(r); },
                               solution.k, solution.R, grid_step);
}

NeumannEigenDisc neumann_eigen_disc(double R, int mode) {
    if (!(R > 0.0)) throw std::invalid_argument("neumann_eigen_disc: R must be positive");
    const double k = bessel_j1_zero(mode).value / R;
    return NeumannEigenDisc{k, bessel_j(0, k * R)};
}

TrefftzSolution trefftz_defect(const StarShape& shape, double k, int N,
                               int n_colloc) {
    if (!(k > 0.0)) throw std::invalid_argument("trefftz_defect: k must be positive");
    if (N < 0) throw std::invalid_argument("trefftz_defect: N must be >= 0");
    if (n_colloc < 4 * N + 16) {
        throw std::invalid_argument("trefftz_defect: need n_colloc >= 4N + 16");
    }

    const int cols = 2 * N + 1;
    Eigen::MatrixXcd basis(n_colloc, cols);      // sqrt(w_i) J_{|n|}(k f) e^{i n phi}
    Eigen::MatrixXcd normal_d(n_colloc, cols);   // sqrt(w_i) d/dN of the basis
    Eigen::VectorXcd rhs(n_colloc);

    const double dirichlet = -1.0 / (k * k);     // u_h on S
    for (int i = 0; i < n_colloc; ++i) {
        const double phi = -kPi + 2.0 * kPi * i / n_colloc;
        const double f = shape.eval(phi);
        const double fp = shape.eval(phi, 1);
        const double arc = std::sqrt(f * f + fp * fp);   // |x'(phi)|
        const double w = std::sqrt(arc * (2.0 * kPi / n_colloc));
        rhs(i) = w * dirichlet;
        for (int n = -N; n <= N; ++n) {
            const int a = std::abs(n);
            const Complex angular = std::exp(1i * (static_cast<double>(n) * phi));
            basis(i, n + N) = w * bessel_j(a, k * f) * angular;
            // outward normal (f rhat - f' phihat)/|x'|; grad u = u_r rhat
            // + (1/r) u_phi phihat evaluated at r = f.
            const Complex u_r = k * bessel_j_deriv(a, k * f) * angular;
            const Complex u_phi = 1i * (static_cast<double>(n)) * bessel_j(a, k * f) * angular;
            normal_d(i, n + N) = w * (f * u_r - (fp / f) * u_phi) / arc;
        }
    }

    // Columns that are numerically invisible on the boundary but loud in
    // the normal derivative are interior Dirichlet eigenmodes (J_n(kf) ~ 0
    // with J_n'(kf) = O(1)); any weight on them leaves the fit unchanged
    // while corrupting the defect, so they are excluded. The surviving
    // columns are scaled to unit norm, which keeps the conditioning of the
    // high harmonics bounded.
    std::vector<int> kept;
    Eigen::VectorXd scale = Eigen::VectorXd::Zero(cols);
    for (int c = 0; c < cols; ++c) {
        const double bn = basis.col(c).norm();
        const double nn = normal_d.col(c).norm();
        if (bn == 0.0 || nn > 1e8 * bn) continue;
        kept.push_back(c);
        scale(c) = bn;
    }
    const int nkept = static_cast<int>(kept.size());
    Eigen::MatrixXcd scaled(n_colloc, nkept);
    for (int c = 0; c < nkept; ++c) {
        scaled.col(c) = basis.col(kept[static_cast<size_t>(c)]) /
                        scale(kept[static_cast<size_t>(c)]);
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(scaled,
                                           Eigen::ComputeThinU | Eigen::ComputeThinV);
    svd.setThreshold(1e-13);
    const int rank = static_cast<int>(svd.rank());
    const Eigen::VectorXcd kept_coeffs = svd.solve(rhs);

    TrefftzSolution sol;
    sol.k = k;
    sol.order = N;
    sol.rank = rank;
    const auto& sv = svd.singularValues();
    const double smin = (rank > 0) ? sv(rank - 1) : 0.0;
    sol.condition = (smin > 0.0) ? sv(0) / smin
                                 : std::numeric_limits<double>::infinity();

    sol.coeffs.assign(static_cast<size_t>(cols), Complex(0.0, 0.0));
    Eigen::VectorXcd coeffs = Eigen::VectorXcd::Zero(cols);
    for (int c = 0; c < nkept; ++c) {
        const int col = kept[static_cast<size_t>(c)];
        coeffs(col) = kept_coeffs(c) / scale(col);
        sol.coeffs[static_cast<size_t>(col)] = coeffs(col);
    }

    sol.boundary_residual = (basis * coeffs - rhs).norm();
    sol.neumann_defect = (normal_d * coeffs).norm();

    if (rank < nkept && sol.boundary_residual > 1e-6) {
        std::ostringstream msg;
        msg << "trefftz_defect: rank-deficient collocation system (rank " << rank
            << " of " << nkept << ")";
        throw std::runtime_error(msg.str());
    }
    if (sol.boundary_residual > 1e-6) {
        std::ostringstream msg;
        msg << "trefftz_defect: Dirichlet fit failed, boundary residual "
            << sol.boundary_residual << " > 1e-6 (defect not meaningful)";
        throw std::runtime_error(msg.str());
    }
    return sol;
}

}  // namespace pomlab
