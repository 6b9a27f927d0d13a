#include "tropsand/tropical_json.hpp"

namespace tropsand {

namespace {

using Kind = TropicalError::Kind;

nlohmann::json point_json(const RationalPoint& p) { return nlohmann::json::array({to_string(p.x), to_string(p.y)}); }

Rational rational_json(const nlohmann::json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    throw TropicalError(Kind::InvalidCurve, "exact rationals must be strings or integers");
}

RationalPoint point_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw TropicalError(Kind::InvalidCurve, "point must be a pair");
    return {rational_json(j[0]), rational_json(j[1])};
}

LatticePoint lattice_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw TropicalError(Kind::InvalidCurve, "integer pair expected");
    return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
}

}  // namespace

nlohmann::json to_json(const TropicalPolynomial& poly) {
    nlohmann::json support = nlohmann::json::array(), coeffs = nlohmann::json::array();
    for (const auto& m : poly.monomials()) {
        support.push_back({m.exponent.x, m.exponent.y});
        coeffs.push_back(to_string(m.coefficient));
    }
    return {{"support", support}, {"coeffs", coeffs}};
}

TropicalPolynomial polynomial_from_json(const nlohmann::json& j) {
    const auto& support = j.at("support");
    const auto& coeffs = j.at("coeffs");
    if (support.size() != coeffs.size()) throw TropicalError(Kind::InvalidPolynomial, "support and coeffs differ in length");
    std::vector<Monomial> monomials;
    for (std::size_t i = 0; i < support.size(); ++i)
        monomials.push_back({lattice_from_json(support[i]), rational_json(coeffs[i])});
    return TropicalPolynomial(std::move(monomials));
}

nlohmann::json to_json(const TropicalCurve& curve) {
    nlohmann::json vertices = nlohmann::json::array(), edges = nlohmann::json::array();
    for (const auto& v : curve.vertices()) vertices.push_back(point_json(v));
    for (const auto& e : curve.edges()) {
        nlohmann::json edge;
        switch (e.kind) {
            case EdgeKind::Segment: edge["v"] = {e.from, e.to}; break;
            case EdgeKind::Ray: edge["ray"] = e.from; break;
            case EdgeKind::Line: edge["line"] = point_json(e.anchor); break;
        }
        edge["dir"] = {e.direction.x, e.direction.y};
        edge["weight"] = e.weight;
        edges.push_back(std::move(edge));
    }
    return {{"vertices", vertices}, {"edges", edges}};
}

TropicalCurve curve_from_json(const nlohmann::json& j) {
    std::vector<RationalPoint> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(point_from_json(v));
    auto vertex = [&](const nlohmann::json& idx) {
        const auto i = idx.get<std::size_t>();
        if (i >= vertices.size()) throw TropicalError(Kind::InvalidCurve, "edge refers to a missing vertex");
        return vertices[i];
    };
    TropicalCurve curve;
    for (const auto& v : vertices) curve.add_vertex(v);
    for (const auto& e : j.at("edges")) {
        const auto weight = e.at("weight").get<std::int64_t>();
        const auto dir = lattice_from_json(e.at("dir"));
        if (e.contains("v")) {
            const auto a = vertex(e["v"].at(0));
            const auto b = vertex(e["v"].at(1));
            if (primitive_direction(b - a) != dir) throw TropicalError(Kind::InvalidCurve, "segment direction does not match its endpoints");
            curve.add_segment(a, b, weight);
        } else if (e.contains("ray")) {
            curve.add_ray(vertex(e["ray"]), dir, weight);
        } else if (e.contains("line")) {
            curve.add_line(point_from_json(e["line"]), dir, weight);
        } else {
            throw TropicalError(Kind::InvalidCurve, "edge needs one of v, ray or line");
        }
    }
    return curve;
}

nlohmann::json to_json(const OmegaTropicalCurve& curve) {
    auto j = to_json(curve.curve());
    nlohmann::json polygon = nlohmann::json::array();
    for (auto v : curve.polygon().vertices()) polygon.push_back({v.x, v.y});
    j["polygon"] = polygon;
    j["side_labels"] = curve.side_labels();
    return j;
}

}  // namespace tropsand
