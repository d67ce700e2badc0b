#ifndef POMLAB_STAR_SHAPE_HPP
#define POMLAB_STAR_SHAPE_HPP

#include <array>
#include <vector>

namespace pomlab {

using Vec2 = std::array<double, 2>;

/// Planar star-shaped domain bounded by r = f(phi) in polar coordinates,
/// where f is the trigonometric polynomial
///
///   f(phi) = mean_radius + sum_m (a_m cos(m phi) + b_m sin(m phi)).
///
/// Construction certifies the bounds 0 < c1 <= f <= c2 through
/// c1 = mean_radius - sum_m(|a_m| + |b_m|) and rejects coefficient sets
/// with c1 <= 0. All derivatives are available exactly, term by term.
/// Instances are immutable; every member is safe to call concurrently.
class StarShape {
public:
    StarShape(double mean_radius, std::vector<double> cos_coeffs,
              std::vector<double> sin_coeffs);

    static StarShape disc(double radius) { return StarShape(radius, {}, {}); }

    /// f^{(deriv)}(phi), deriv in 0..3, by term-wise differentiation.
    double eval(double phi, int deriv = 0) const;

    double mean_radius() const { return mean_radius_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }
    int order() const { return static_cast<int>(cos_.size()); }
    bool is_disc() const;

    double lower_bound() const { return c1_; }  // certified c1 <= f
    double upper_bound() const { return c2_; }  // certified f <= c2

    /// Same geometric boundary with the parametrization origin moved:
    /// returns the shape g with g(phi) = f(phi + tau).
    StarShape rotated(double tau) const;

private:
    double mean_radius_;
    std::vector<double> cos_, sin_;
    double c1_, c2_;
};

/// Enclosed area, (1/2) * integral of f^2 over one period.
double area(const StarShape& shape);

/// Rotation about the origin followed by a translation.
struct RigidMotion {
    double rotation = 0.0;
    Vec2 translation{0.0, 0.0};

    Vec2 apply(const Vec2& p) const;
    RigidMotion inverse() const;
};

}  // namespace pomlab

#endif
