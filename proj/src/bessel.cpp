#include "pomlab/bessel.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pomlab {

namespace {

constexpr double kMaxArgument = 1e4;
constexpr int kMaxOrder = 300;

// Alternating power series J_n(x) = sum_k (-1)^k (x/2)^{n+2k} / (k! (n+k)!),
// accumulated in long double so the cancellation near x ~ 18 stays below
// the 1e-12 budget.
double series_j(int n, double x) {
    const long double half = 0.5L * static_cast<long double>(x);
    long double term = 1.0L;
    for (int i = 1; i <= n; ++i) term *= half / i;  // (x/2)^n / n!
    long double sum = term;
    const long double h2 = half * half;
    for (int k = 1; k <= 200; ++k) {
        term *= -h2 / (static_cast<long double>(k) * (n + k));
        sum += term;
        if (std::abs(term) < 1e-22L * (std::abs(sum) + 1e-30L)) break;
    }
    return static_cast<double>(sum);
}

// Normalized backward recurrence: run J_{m-1} = (2m/x) J_m - J_{m+1}
// downward from an index past the turning point and scale with
// J_0 + 2 sum_{k>=1} J_{2k} = 1.
double miller_j(int n, double x) {
    const int start_even = [&] {
        int m = static_cast<int>(x + 14.0 * std::cbrt(x) + 24.0) + n;
        return m + (m & 1);
    }();
    long double jp = 0.0L;   // J_{m+1}
    long double jc = 1e-30L; // J_m (arbitrary scale)
    long double norm = 0.0L;
    long double wanted = 0.0L;
    for (int m = start_even; m >= 1; --m) {
        const long double jm = (2.0L * m / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (m - 1 == n) wanted = jc;
        if ((m - 1) % 2 == 0) norm += (m - 1 == 0) ? jc : 2.0L * jc;
        if (std::abs(jc) > 1e250L) {  // rescale before overflow
            jc *= 1e-250L;
            jp *= 1e-250L;
            norm *= 1e-250L;
            wanted *= 1e-250L;
        }
    }
    return static_cast<double>(wanted / norm);
}

double j1_derivative(double x, double j1_val) {
    // J_1' = J_0 - J_1 / x
    return bessel_j(0, x) - j1_val / x;
}

}  // namespace

double bessel_j(int n, double x) {
    if (n < 0) throw std::invalid_argument("bessel_j: order must be >= 0");
    if (n > kMaxOrder) throw std::invalid_argument("bessel_j: order too large");
    if (!(std::abs(x) <= kMaxArgument)) {
        throw std::invalid_argument("bessel_j: |x| must be <= 1e4");
    }
    if (x == 0.0) return n == 0 ? 1.0 : 0.0;
    const double ax = std::abs(x);
    double v = (ax <= 18.0) ? series_j(n, ax) : miller_j(n, ax);
    if (x < 0.0 && (n & 1)) v = -v;  // J_n(-x) = (-1)^n J_n(x)
    return v;
}

BesselZero bessel_j1_zero(int m) {
    if (m < 1 || m > 50) {
        throw std::invalid_argument("bessel_j1_zero: index must be in 1..50");
    }
    const double pi = 3.14159265358979323846;
    const double lo = (m - 0.25) * pi;
    const double hi = (m + 0.75) * pi;

    // Sign-change scan inside the bracket, then bisection.
    const int scan = 64;
    double a = lo, b = hi;
    double fa = bessel_j(1, a);
    bool found = false;
    for (int i = 1; i <= scan; ++i) {
        const double t = lo + (hi - lo) * i / scan;
        const double ft = bessel_j(1, t);
        if (fa == 0.0) { a = b = a; found = true; break; }
        if (fa * ft <= 0.0) { b = t; found = true; break; }
        a = t;
        fa = ft;
    }
    if (!found) throw std::runtime_error("bessel_j1_zero: no sign change in bracket");

    for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
        const double mid = 0.5 * (a + b);
        const double fm = bessel_j(1, mid);
        if (fa * fm <= 0.0) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    double z = 0.5 * (a + b);
    for (int it = 0; it < 5; ++it) {  // Newton polish
        const double f = bessel_j(1, z);
        if (std::abs(f) <= 1e-15) break;
        const double df = j1_derivative(z, f);
        z -= f / df;
    }
    return BesselZero{1, m, z};
}

double gamma_three_halves() {
    return 0.5 * std::sqrt(3.14159265358979323846);
}

}  // namespace pomlab
