#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropsand/config.hpp"
#include "tropsand/edge_weights.hpp"
#include "tropsand/minimality.hpp"
#include "tropsand/region_fit.hpp"

namespace tropsand {

struct SweepOptions {
    /// Absolute values win; otherwise the per-site multiples are divided by N.
    std::optional<double> strip_halfwidth;
    double strip_halfwidth_sites = 3.0;
    std::optional<Rational> probe_step;
    Rational probe_step_sites{1, 4};
    std::int64_t ceiling = 1'000'000'000'000;
    std::size_t jobs = 1;
    FitOptions fit;
    bool run_probe = true;
    /// Small-case area enumeration; skipped when run_probe is false.
    AreaEnumerationOptions area;
    /// Called from worker threads once a scale has relaxed; must be thread safe.
    std::function<void(std::int64_t scale, const RelaxationResult&)> on_relaxed;
};

/// Everything measured at one scale. Optional fields stay empty when an earlier stage failed.
struct ScaleRecord {
    std::int64_t scale = 0;
    bool ok = false;
    std::string failed_stage;  ///< empty on success
    std::string error;
    std::vector<std::string> warnings;

    std::int64_t topplings_total = 0;
    std::int64_t grains_lost = 0;
    double relax_seconds = 0.0;

    std::size_t locus_size = 0;
    std::array<std::size_t, 4> deficit_histogram{};
    /// Locus sites within the fit's boundary band, reported apart from the interior locus.
    std::size_t boundary_locus_sites = 0;

    std::size_t regions = 0;
    double coverage = 0.0;
    std::optional<TropicalPolynomial> fitted;     ///< straight from the linear regions
    std::optional<TropicalPolynomial> polynomial; ///< anchored to vanish on the boundary
    std::optional<OmegaTropicalCurve> curve;
    std::vector<RationalPoint> snapped_points;
    bool balancing_ok = false;
    std::optional<double> area;
    std::optional<WeightTable> weights;
    std::optional<MinimalityReport> minimality;
    std::optional<AreaConsistency> area_check;
    /// combinatorial type of the fitted curve, see curve_signature
    std::string signature;
    /// sup over interior locus points (outside the boundary band) of the distance to the fitted curve
    std::optional<double> locus_to_curve;

    std::optional<double> hausdorff_to_next;
    std::optional<double> sup_odometer_gap;

    // kept for the aggregation step
    std::vector<RationalPoint> locus_points;
    std::shared_ptr<const Odometer> odometer;
    std::vector<std::size_t> classified_sites;
};

struct ConvergenceReport {
    LatticePolygon polygon;
    std::vector<PlanePoint> points;
    std::vector<ScaleRecord> records;  ///< sorted by scale

    bool any_success() const;
};

/// Runs perturb, relax, deviation set, fit, anchor, corner locus, side labels, weight estimation and
/// probes at every scale (concurrently up to options.jobs), then measures consecutive-scale Hausdorff
/// distances and the odometer gap to the largest successful fit. Per-scale failures are recorded, not
/// thrown. Throws std::invalid_argument unless scales are positive and strictly increasing.
ConvergenceReport convergence_sweep(const LatticePolygon& polygon, const std::vector<PlanePoint>& points,
                                    const std::vector<std::int64_t>& scales, const SweepOptions& options = {});

/// Sorted edge (direction, weight) multiset plus the vertex degree sequence. Equal signatures mean the same
/// combinatorial type for curves of the same configuration.
std::string curve_signature(const TropicalCurve& curve);

nlohmann::json to_json(const WeightTable& table);
/// Inverse of to_json(WeightTable). Throws nlohmann::json exceptions on malformed input.
WeightTable weight_table_from_json(const nlohmann::json& j);
nlohmann::json to_json(const MinimalityReport& report);
nlohmann::json to_json(const ScaleRecord& record);
nlohmann::json to_json(const ConvergenceReport& report);

}  // namespace tropsand
