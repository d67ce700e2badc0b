#include "pomlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

namespace pomlab {

namespace {

constexpr int kPeriodicNodeCap = 1 << 20;
constexpr int kPanelCap = 1 << 16;
constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail_convergence(const char* rule, double estimate,
                                   double tol, int nodes) {
    std::ostringstream msg;
    msg << rule << ": not converged, estimate " << estimate << " > tol " << tol
        << " at " << nodes << " nodes";
    throw convergence_error(msg.str());
}

}  // namespace

Complex periodic_trapezoid(const std::function<Complex(double)>& g, int nodes) {
    // Equal weights over one period; nodes at -pi + 2 pi j / N.
    Complex sum{0.0, 0.0};
    for (int j = 0; j < nodes; ++j) {
        sum += g(-kPi + 2.0 * kPi * j / nodes);
    }
    return sum * (2.0 * kPi / nodes);
}

QuadratureResult periodic_integral(const std::function<Complex(double)>& g,
                                   double tol, int base_nodes) {
    if (!(tol >= 1e-14)) {
        throw std::invalid_argument("periodic_integral: tol must be >= 1e-14");
    }
    int n = std::max(base_nodes, 4);
    Complex prev = periodic_trapezoid(g, n);
    while (true) {
        // I_{2N} reuses I_N: the old nodes are every second node of the
        // doubled grid, so only the midpoints are new.
        Complex mid{0.0, 0.0};
        for (int j = 0; j < n; ++j) {
            mid += g(-kPi + kPi * (2.0 * j + 1.0) / n);
        }
        const Complex curr = 0.5 * prev + mid * (kPi / n);
        const double est = std::abs(curr - prev);
        n *= 2;
        if (est <= tol) return {curr, est, n};
        if (n >= kPeriodicNodeCap) fail_convergence("periodic_integral", est, tol, n);
        prev = curr;
    }
}

namespace {

GaussLegendreRule compute_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n from the Chebyshev-like initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it2 = 0; it2 < 100; ++it2) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre_rule(int n) {
    if (n == 16) {  // the composite half-line rule; initialized once
        static const GaussLegendreRule rule16 = compute_gauss_legendre(16);
        return rule16;
    }
    thread_local std::map<int, GaussLegendreRule> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, compute_gauss_legendre(n)).first;
    }
    return it->second;
}

namespace {

Complex panel_sum(const std::function<Complex(double)>& g, double s_max,
                  int panels, const GaussLegendreRule& rule) {
    const double w = s_max / panels;
    Complex sum{0.0, 0.0};
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * w;
        Complex local{0.0, 0.0};
        for (size_t i = 0; i < rule.nodes.size(); ++i) {
            local += rule.weights[i] * g(mid + 0.5 * w * rule.nodes[i]);
        }
        sum += local * (0.5 * w);
    }
    return sum;
}

}  // namespace

QuadratureResult halfline_integral(const std::function<Complex(double)>& g,
                                   double decay_rate, double tol,
                                   double s_max_override) {
    if (!(decay_rate > 0.0)) {
        throw std::invalid_argument("halfline_integral: decay_rate must be > 0");
    }
    if (!(tol >= 1e-14)) {
        throw std::invalid_argument("halfline_integral: tol must be >= 1e-14");
    }

    double s_max = s_max_override;
    if (s_max <= 0.0) {
        // Envelope constant from samples near the origin; the tail beyond
        // s_max contributes less than ~tol by the decay bound. The extra 8
        // in the exponent absorbs slowly growing prefactors (s^k terms)
        // that the near-origin samples cannot see.
        double c = 0.0;
        for (int i = 0; i <= 8; ++i) {
            const double s = 0.5 * i / decay_rate;
            c = std::max(c, std::abs(g(s)) * std::exp(decay_rate * s));
        }
        c = std::max(2.0 * c, tol);
        s_max = (std::max(std::log(c / tol), 1.0) + 8.0) / decay_rate;
    }

    const GaussLegendreRule& rule = gauss_legendre_rule(16);
    int panels = 4;
    Complex prev = panel_sum(g, s_max, panels, rule);
    while (true) {
        panels *= 2;
        const Complex curr = panel_sum(g, s_max, panels, rule);
        const double est = std::abs(curr - prev);
        if (est <= tol) return {curr, est, 16 * panels};
        if (panels >= kPanelCap) {
            fail_convergence("halfline_integral", est, tol, 16 * panels);
        }
        prev = curr;
    }
}

}  // namespace pomlab
