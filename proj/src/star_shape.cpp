#include "pomlab/star_shape.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "pomlab/quadrature.hpp"

namespace pomlab {

StarShape::StarShape(double mean_radius, std::vector<double> cos_coeffs,
                     std::vector<double> sin_coeffs)
    : mean_radius_(mean_radius),
      cos_(std::move(cos_coeffs)),
      sin_(std::move(sin_coeffs)) {
    if (!(mean_radius_ > 0.0) || !std::isfinite(mean_radius_)) {
        throw std::invalid_argument("StarShape: mean_radius must be positive");
    }
    // Pad the shorter list so both carry one entry per harmonic.
    const size_t m = std::max(cos_.size(), sin_.size());
    cos_.resize(m, 0.0);
    sin_.resize(m, 0.0);

    double coeff_sum = 0.0;
    for (size_t i = 0; i < m; ++i) {
        if (!std::isfinite(cos_[i]) || !std::isfinite(sin_[i])) {
            throw std::invalid_argument("StarShape: coefficients must be finite");
        }
        coeff_sum += std::abs(cos_[i]) + std::abs(sin_[i]);
    }
    c1_ = mean_radius_ - coeff_sum;
    c2_ = mean_radius_ + coeff_sum;
    if (!(c1_ > 0.0)) {
        std::ostringstream msg;
        msg << "StarShape: positivity bound violated: c1 = mean_radius - "
               "sum(|a_m| + |b_m|) = "
            << mean_radius_ << " - " << coeff_sum << " = " << c1_
            << " must be > 0";
        throw std::invalid_argument(msg.str());
    }
}

double StarShape::eval(double phi, int deriv) const {
    if (deriv < 0 || deriv > 3) {
        throw std::invalid_argument("StarShape::eval: deriv must be in 0..3");
    }
    double acc = (deriv == 0) ? mean_radius_ : 0.0;
    for (size_t i = 0; i < cos_.size(); ++i) {
        const double m = static_cast<double>(i + 1);
        const double c = std::cos(m * phi);
        const double s = std::sin(m * phi);
        // d/dphi (a cos + b sin) = m (-a sin + b cos), and so on.
        switch (deriv) {
            case 0: acc += cos_[i] * c + sin_[i] * s; break;
            case 1: acc += m * (-cos_[i] * s + sin_[i] * c); break;
            case 2: acc += m * m * (-cos_[i] * c - sin_[i] * s); break;
            case 3: acc += m * m * m * (cos_[i] * s - sin_[i] * c); break;
        }
    }
    return acc;
}

bool StarShape::is_disc() const {
    for (size_t i = 0; i < cos_.size(); ++i) {
        if (cos_[i] != 0.0 || sin_[i] != 0.0) return false;
    }
    return true;
}

StarShape StarShape::rotated(double tau) const {
    // f(phi + tau) re-expanded in cos/sin of m phi.
    std::vector<double> c(cos_.size()), s(sin_.size());
    for (size_t i = 0; i < cos_.size(); ++i) {
        const double m = static_cast<double>(i + 1);
        const double cm = std::cos(m * tau);
        const double sm = std::sin(m * tau);
        c[i] = cos_[i] * cm + sin_[i] * sm;
        s[i] = -cos_[i] * sm + sin_[i] * cm;
    }
    return StarShape(mean_radius_, std::move(c), std::move(s));
}

double area(const StarShape& shape) {
    auto integrand = [&shape](double phi) {
        const double f = shape.eval(phi);
        return Complex(0.5 * f * f, 0.0);
    };
    return periodic_integral(integrand, 1e-12).value.real();
}

Vec2 RigidMotion::apply(const Vec2& p) const {
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    return {c * p[0] - s * p[1] + translation[0],
            s * p[0] + c * p[1] + translation[1]};
}

RigidMotion RigidMotion::inverse() const {
    const double c = std::cos(rotation);
    const double s = std::sin(rotation);
    // sigma^{-1}: x -> R^T (x - t)
    return {-rotation,
            {-(c * translation[0] + s * translation[1]),
             -(-s * translation[0] + c * translation[1])}};
}

}  // namespace pomlab
