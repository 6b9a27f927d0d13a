#pragma once

#include <json.hpp>

#include "tropsand/omega_curve.hpp"

namespace tropsand {

/// {"support": [[k,l],...], "coeffs": ["a/b",...]}
nlohmann::json to_json(const TropicalPolynomial& poly);
TropicalPolynomial polynomial_from_json(const nlohmann::json& j);

/// {"vertices": [["x","y"],...], "edges": [{"v":[i,j] | "ray":i | "line":["x","y"], "dir":[k,l], "weight":m}]}
nlohmann::json to_json(const TropicalCurve& curve);
TropicalCurve curve_from_json(const nlohmann::json& j);

/// Curve JSON plus "polygon" and "side_labels".
nlohmann::json to_json(const OmegaTropicalCurve& curve);

}  // namespace tropsand
