#ifndef POMLAB_HELMHOLTZ_BVP_HPP
#define POMLAB_HELMHOLTZ_BVP_HPP

#include <complex>
#include <functional>
#include <vector>

#include "pomlab/star_shape.hpp"

namespace pomlab {

using Complex = std::complex<double>;

/// Closed-form solution of (lap + k^2) u = 1 on the disc of radius R with
/// u = 0 on the boundary:
///
///   u(r) = (1/k^2) (1 - J0(k r) / J0(k R)).
///
/// The normal derivative on the boundary, u_r(R) = J1(kR) / (k J0(kR)),
/// vanishes exactly when kR is a zero of J1; its magnitude is the disc's
/// Neumann defect.
struct RadialSolution {
    double R = 1.0;
    double k = 1.0;

    double u(double r) const;
    double du(double r) const;       // exact radial derivative
    double neumann_defect() const;   // |u_r(R)|
};

/// Requires |J0(kR)| > 1e-8 (the closed form degenerates at J0 zeros).
RadialSolution disc_overdetermined(double R, double k);

/// Max over an interior radial grid of |u'' + u'/r + k^2 u - rhs| with
/// u', u'' by centered finite differences of the supplied profile.
/// Second-order accurate in grid_step.
double radial_pde_residual(const std::function<double(double)>& u, double k,
                           double R, double grid_step, double rhs = 1.0);

/// Finite-difference residual of the closed-form solution; grid_step must
/// be at most R/100.
double residual_check(const RadialSolution& solution, double grid_step);

/// Wavenumber k = j_{1,mode}/R at which u = J0(k r) satisfies u_r(R) = 0
/// with a nonzero constant boundary value J0(kR).
struct NeumannEigenDisc {
    double k = 0.0;
    double boundary_value = 0.0;
};
NeumannEigenDisc neumann_eigen_disc(double R, int mode);

/// Least-squares fit of u_h(r, phi) = sum_n c_n J_{|n|}(k r) e^{i n phi},
/// n = -N..N, to the boundary data u_h = -1/k^2 on S (so u = u_h + 1/k^2
/// solves the inhomogeneous equation exactly in the interior). Discrete
/// L^2(S) norms use equal-phi collocation weighted by the arclength
/// element sqrt(f^2 + f'^2) dphi.
struct TrefftzSolution {
    double k = 0.0;
    int order = 0;                  // expansion half-width N
    std::vector<Complex> coeffs;    // c_{-N} .. c_{N}
    double boundary_residual = 0.0; // ||u_h + 1/k^2||_{L2(S)}, discrete
    double neumann_defect = 0.0;    // ||d u_h / dN||_{L2(S)}, discrete
    double condition = 0.0;         // singular-value ratio of scaled system
    int rank = 0;

    Complex coeff(int n) const { return coeffs[static_cast<size_t>(n + order)]; }
};

/// Solves the boundary fit by SVD on the column-scaled collocation matrix
/// (never by normal equations) and evaluates the Neumann defect from the
/// exact basis gradients, J'_n = (J_{n-1} - J_{n+1})/2. Requires
/// n_colloc >= 4N + 16. A boundary_residual above 1e-6 means the
/// Dirichlet fit failed and the defect is not meaningful; that case
/// throws.
TrefftzSolution trefftz_defect(const StarShape& shape, double k, int N,
                               int n_colloc);

}  // namespace pomlab

#endif
