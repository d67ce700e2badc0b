#ifndef POMLAB_SHAPE_IO_HPP
#define POMLAB_SHAPE_IO_HPP

#include <string>

#include "pomlab/star_shape.hpp"

namespace pomlab {

/// Shape spec files are JSON documents
///   {"mean_radius": r, "cos": [a1..aM], "sin": [b1..bM]}
/// with coefficients stored as decimal text. Readers reject documents
/// violating the positivity bound c1 = mean_radius - sum|coeffs| > 0 with
/// a diagnostic naming the bound.
StarShape parse_shape_json(const std::string& text);
StarShape load_shape(const std::string& path);
std::string shape_to_json(const StarShape& shape);
void save_shape(const std::string& path, const StarShape& shape);

}  // namespace pomlab

#endif
