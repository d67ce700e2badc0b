#ifndef POMLAB_BESSEL_HPP
#define POMLAB_BESSEL_HPP

namespace pomlab {

/// Bessel function of the first kind, J_n(x), for integer n >= 0 and
/// |x| <= 1e4. Absolute error is below 1e-12 on that range: the power
/// series (long double accumulation) is used for |x| <= 18 and a
/// normalized backward recurrence for larger arguments.
double bessel_j(int n, double x);

/// m-th positive zero of J_1, refined to |J_1(value)| <= 1e-12.
struct BesselZero {
    int order;     // always 1 here
    int index;     // m >= 1
    double value;
};

/// Zero located inside ((m - 1/4) pi, (m + 3/4) pi) by a sign-change scan,
/// then bisection and Newton polish. Supports 1 <= m <= 50.
BesselZero bessel_j1_zero(int m);

/// Gamma(3/2) = sqrt(pi)/2.
double gamma_three_halves();

}  // namespace pomlab

#endif
