#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tropsand/domain.hpp"

namespace tropsand {

/// Perturbation points P, all strictly inside the polygon.
class PerturbationConfig {
public:
    PerturbationConfig(const LatticePolygon& polygon, std::vector<PlanePoint> points);

    const std::vector<PlanePoint>& points() const { return points_; }

    /// Rounded sites [N p]; throws PointOutsideDomain when one misses the domain.
    std::vector<LatticePoint> rounded_sites(const ScaledDomain& domain) const;

    /// Human readable warnings, e.g. two points sharing a rounded site at this scale.
    std::vector<std::string> collisions(const ScaledDomain& domain) const;

private:
    std::vector<PlanePoint> points_;
};

/// The shared config document: polygon, points and one or more scales.
struct DomainConfig {
    LatticePolygon polygon;
    PerturbationConfig perturbation;
    std::vector<std::int64_t> scales;
};

PlanePoint parse_plane_point(const nlohmann::json& j);
nlohmann::json plane_point_to_json(const PlanePoint& p);

/// Parses {"polygon": [[x,y],...], "points": [[a,b],...], "scale": N} (or "scales": [...]).
DomainConfig parse_domain_config(const nlohmann::json& j);

}  // namespace tropsand
