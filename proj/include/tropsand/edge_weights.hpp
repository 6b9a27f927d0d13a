#pragma once

#include <optional>
#include <vector>

#include "tropsand/deviation.hpp"
#include "tropsand/polygon.hpp"
#include "tropsand/tropical_curve.hpp"

namespace tropsand {

struct StripOptions {
    /// Default 3 / N.
    std::optional<double> halfwidth;
    /// Minimum retreat from each edge endpoint; default 5 / N. Raised per endpoint when the neighbouring
    /// strips or the polygon's boundary band would otherwise be touched.
    std::optional<double> retreat;
    /// Strips keep this far from the polygon sides; default 3 / N.
    std::optional<double> boundary_band;
    /// When set, endpoints on its boundary also retreat from its sides.
    std::optional<LatticePolygon> polygon;
    /// Estimates farther than this from an integer are flagged.
    double flag_distance = 0.25;
};

struct EdgeWeightEstimate {
    std::size_t edge = 0;          ///< index into curve.edges()
    LatticePoint direction;
    std::int64_t curve_weight = 0; ///< weight carried by the curve itself
    double strip_length = 0.0;     ///< length(e ∩ strip); 0 when the retreats eat the whole edge
    std::size_t sites = 0;
    std::int64_t deficit_sum = 0;  ///< sum of 3 - phi_N over locus sites in the strip
    double raw = 0.0;
    std::int64_t rounded = 0;      ///< nearest positive integer
    bool flagged = false;
};

struct WeightTable {
    std::int64_t scale = 1;
    double halfwidth = 0.0;
    std::vector<EdgeWeightEstimate> entries;

    std::size_t flagged_count() const;
};

/// m_e ≈ sum of deficits in the strip around e / (N |l_e| length(e ∩ strip)).
/// Curve edges must be bounded. Throws AnalysisError(OverlappingStrips) if two strips intersect.
WeightTable estimate_edge_weights(const DeviationLocus& locus, const TropicalCurve& curve, const StripOptions& options = {});
WeightTable estimate_edge_weights(const DeviationLocus& locus, const TropicalCurve& curve, double strip_halfwidth);

}  // namespace tropsand
