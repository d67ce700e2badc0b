#include "pomlab/shape_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace pomlab {

StarShape parse_shape_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("shape file: invalid JSON: ") + e.what());
    }
    if (!doc.contains("mean_radius")) {
        throw std::invalid_argument("shape file: missing \"mean_radius\"");
    }
    const double r = doc["mean_radius"].get<double>();
    std::vector<double> a, b;
    if (doc.contains("cos")) a = doc["cos"].get<std::vector<double>>();
    if (doc.contains("sin")) b = doc["sin"].get<std::vector<double>>();
    // StarShape enforces the positivity bound and names it in the message.
    return StarShape(r, std::move(a), std::move(b));
}

StarShape load_shape(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("shape file not found: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_shape_json(buf.str());
}

std::string shape_to_json(const StarShape& shape) {
    nlohmann::json doc;
    doc["mean_radius"] = shape.mean_radius();
    doc["cos"] = shape.cos_coeffs();
    doc["sin"] = shape.sin_coeffs();
    return doc.dump(2) + "\n";
}

void save_shape(const std::string& path, const StarShape& shape) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write shape file: " + path);
    }
    out << shape_to_json(shape);
}

}  // namespace pomlab
