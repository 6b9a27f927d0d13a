#include "tropsand/config.hpp"

#include <map>

namespace tropsand {

namespace {

using Kind = LatticeError::Kind;

Coordinate parse_coordinate(const nlohmann::json& j) {
    if (j.is_string()) return Coordinate(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return Coordinate(Rational(j.get<std::int64_t>()));
    if (j.is_number()) return Coordinate(j.get<double>());
    throw LatticeError(Kind::InvalidConfig, "coordinate must be a number or a fraction string");
}

}  // namespace

PerturbationConfig::PerturbationConfig(const LatticePolygon& polygon, std::vector<PlanePoint> points)
    : points_(std::move(points)) {
    if (points_.empty()) throw LatticeError(Kind::InvalidConfig, "perturbation set P must be non-empty");
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (!polygon.contains_interior(points_[i].to_rational()))
            throw LatticeError(Kind::PointOutsideDomain, "point " + std::to_string(i) + " is not in the polygon interior");
    }
}

std::vector<LatticePoint> PerturbationConfig::rounded_sites(const ScaledDomain& domain) const {
    std::vector<LatticePoint> out;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        auto v = round_down(points_[i], domain.scale());
        if (!domain.contains(v))
            throw LatticeError(Kind::PointOutsideDomain, "point " + std::to_string(i) + " rounds to a non-site at N=" +
                                                             std::to_string(domain.scale()));
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> PerturbationConfig::collisions(const ScaledDomain& domain) const {
    std::map<LatticePoint, std::vector<std::size_t>> by_site;
    for (std::size_t i = 0; i < points_.size(); ++i) by_site[round_down(points_[i], domain.scale())].push_back(i);
    std::vector<std::string> warnings;
    for (const auto& [site, idx] : by_site) {
        if (idx.size() < 2) continue;
        std::string msg = "points";
        for (auto i : idx) msg += " " + std::to_string(i);
        msg += " share site (" + std::to_string(site.x) + "," + std::to_string(site.y) + ") at N=" +
               std::to_string(domain.scale()) + "; deltas are added";
        warnings.push_back(std::move(msg));
    }
    return warnings;
}

PlanePoint parse_plane_point(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2) throw LatticeError(Kind::InvalidConfig, "point must be a pair");
    return {parse_coordinate(j[0]), parse_coordinate(j[1])};
}

nlohmann::json plane_point_to_json(const PlanePoint& p) {
    auto coord = [](const Coordinate& c) -> nlohmann::json {
        if (c.is_exact()) return to_string(c.to_rational());
        return c.to_double();
    };
    return nlohmann::json::array({coord(p.x), coord(p.y)});
}

DomainConfig parse_domain_config(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("polygon") || !j.contains("points"))
        throw LatticeError(Kind::InvalidConfig, "config needs \"polygon\" and \"points\"");
    std::vector<LatticePoint> vertices;
    for (const auto& v : j.at("polygon")) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
            throw LatticeError(Kind::InvalidConfig, "polygon vertices must be integer pairs");
        vertices.push_back({v[0].get<std::int64_t>(), v[1].get<std::int64_t>()});
    }
    auto polygon = validate_polygon(std::move(vertices));
    std::vector<PlanePoint> points;
    for (const auto& p : j.at("points")) points.push_back(parse_plane_point(p));
    PerturbationConfig perturbation(polygon, std::move(points));

    std::vector<std::int64_t> scales;
    if (j.contains("scale")) scales.push_back(j.at("scale").get<std::int64_t>());
    if (j.contains("scales"))
        for (const auto& s : j.at("scales")) scales.push_back(s.get<std::int64_t>());
    for (auto s : scales)
        if (s < 1) throw LatticeError(Kind::InvalidConfig, "scales must be positive");
    return {std::move(polygon), std::move(perturbation), std::move(scales)};
}

}  // namespace tropsand
