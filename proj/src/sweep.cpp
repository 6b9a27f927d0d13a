#include "tropsand/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "tropsand/hausdorff.hpp"
#include "tropsand/tropical_json.hpp"

namespace tropsand {

namespace {

bool near_boundary(const ScaledDomain& domain, LatticePoint v, int band) {
    for (int dy = -band; dy <= band; ++dy)
        for (int dx = -band; dx <= band; ++dx)
            if (!domain.contains({v.x + dx, v.y + dy})) return true;
    return false;
}

ScaleRecord run_scale(const LatticePolygon& polygon, const PerturbationConfig& config, std::int64_t scale,
                      const SweepOptions& options) {
    ScaleRecord rec;
    rec.scale = scale;
    const double n = static_cast<double>(scale);
    std::string stage = "domain";
    try {
        auto domain = make_domain(polygon, scale);
        rec.warnings = config.collisions(*domain);

        stage = "relax";
        RelaxOptions ropts;
        ropts.ceiling = options.ceiling;
        const auto t0 = std::chrono::steady_clock::now();
        const auto result = relax_queue(perturb(max_stable(domain), config), ropts);
        rec.relax_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rec.topplings_total = result.topplings_total;
        rec.grains_lost = result.grains_lost;
        if (options.on_relaxed) options.on_relaxed(scale, result);

        stage = "deviation";
        const auto locus = deviation_set(result);
        rec.locus_size = locus.sites.size();
        rec.deficit_histogram = locus.deficit_histogram();
        rec.locus_points = locus.scaled_points();
        std::vector<RationalPoint> interior_locus;
        for (std::size_t i = 0; i < locus.sites.size(); ++i) {
            if (near_boundary(*domain, locus.sites[i].site, options.fit.boundary_band)) ++rec.boundary_locus_sites;
            else interior_locus.push_back(rec.locus_points[i]);
        }
        rec.odometer = std::make_shared<const Odometer>(result.odometer);

        stage = "fit";
        const auto decomp = fit_linear_regions(result.odometer, options.fit);
        rec.regions = decomp.regions.size();
        rec.coverage = decomp.coverage();
        for (const auto& r : decomp.regions) rec.classified_sites.insert(rec.classified_sites.end(), r.sites.begin(), r.sites.end());

        stage = "assemble";
        const auto assembled = assemble_polynomial(decomp, polygon, scale);
        rec.fitted = assembled.polynomial;
        if (assembled.mismatched_sites != 0)
            rec.warnings.push_back(std::to_string(assembled.mismatched_sites) + " classified sites disagree with the fit");

        stage = "anchor";
        rec.polynomial = anchor_to_boundary(assembled.polynomial, polygon, Rational(2, scale));

        stage = "corner_locus";
        const auto restricted = restricted_corner_locus(*rec.polynomial, polygon);
        rec.balancing_ok = check_interior_balancing(restricted, polygon).ok();

        stage = "side_labels";
        rec.curve = solve_side_labels(restricted, polygon);
        rec.area = tropical_area(rec.curve->curve());
        rec.signature = curve_signature(rec.curve->curve());
        if (!interior_locus.empty() && !rec.curve->curve().edges().empty())
            rec.locus_to_curve = directed_hausdorff(interior_locus, curve_segments(rec.curve->curve()));

        std::vector<RationalPoint> exact;
        for (const auto& p : config.points()) exact.push_back(p.to_rational());
        rec.snapped_points = snap_to_curve(rec.curve->curve(), exact, 2.0 / n).points;

        stage = "edge_weights";
        StripOptions sopts;
        sopts.halfwidth = options.strip_halfwidth.value_or(options.strip_halfwidth_sites / n);
        sopts.polygon = polygon;
        rec.weights = estimate_edge_weights(locus, rec.curve->curve(), sopts);

        if (options.run_probe) {
            stage = "minimality";
            rec.minimality = minimality_probe(*rec.polynomial, polygon, rec.snapped_points,
                                              options.probe_step.value_or(options.probe_step_sites / scale));
            stage = "area";
            rec.area_check = area_consistency(*rec.polynomial, polygon, rec.snapped_points, options.area);
        }
        rec.ok = true;
    } catch (const std::exception& e) {
        rec.failed_stage = stage;
        rec.error = e.what();
    }
    return rec;
}

nlohmann::json rational_point_json(const RationalPoint& p) { return {to_string(p.x), to_string(p.y)}; }

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

nlohmann::json admissibility_json(const Admissibility& a) {
    return {{"vanishes_on_boundary", a.vanishes_on_boundary},
            {"side_labels", a.side_labels},
            {"passes_through", a.passes_through},
            {"admissible", a.ok()},
            {"detail", a.detail}};
}

}  // namespace

std::string curve_signature(const TropicalCurve& curve) {
    std::vector<std::string> edges;
    for (const auto& e : curve.edges())
        edges.push_back("(" + std::to_string(e.direction.x) + "," + std::to_string(e.direction.y) + ")x" + std::to_string(e.weight));
    std::sort(edges.begin(), edges.end());
    std::vector<std::size_t> degrees(curve.vertices().size(), 0);
    for (const auto& e : curve.edges()) {
        if (e.kind == EdgeKind::Line) continue;
        ++degrees[e.from];
        if (e.kind == EdgeKind::Segment) ++degrees[e.to];
    }
    std::sort(degrees.begin(), degrees.end());
    std::string out = "edges";
    for (const auto& e : edges) out += " " + e;
    out += " | degrees";
    for (auto d : degrees) out += " " + std::to_string(d);
    return out;
}

bool ConvergenceReport::any_success() const {
    return std::any_of(records.begin(), records.end(), [](const auto& r) { return r.ok; });
}

ConvergenceReport convergence_sweep(const LatticePolygon& polygon, const std::vector<PlanePoint>& points,
                                    const std::vector<std::int64_t>& scales, const SweepOptions& options) {
    if (scales.empty()) throw std::invalid_argument("no scales given");
    for (std::size_t i = 0; i < scales.size(); ++i) {
        if (scales[i] <= 0) throw std::invalid_argument("scales must be positive");
        if (i > 0 && scales[i] <= scales[i - 1]) throw std::invalid_argument("scales must be strictly increasing");
    }
    const PerturbationConfig config(polygon, points);

    ConvergenceReport report{polygon, points, std::vector<ScaleRecord>(scales.size())};
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < scales.size(); i = next++) report.records[i] = run_scale(polygon, config, scales[i], options);
    };
    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, scales.size());
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    auto& recs = report.records;
    for (std::size_t i = 0; i + 1 < recs.size(); ++i)
        if (!recs[i].locus_points.empty() && !recs[i + 1].locus_points.empty())
            recs[i].hausdorff_to_next = hausdorff_distance(recs[i].locus_points, recs[i + 1].locus_points);

    // reference: the fit at the largest scale that got one
    const ScaleRecord* ref = nullptr;
    for (const auto& r : recs)
        if (r.fitted) ref = &r;
    if (ref) {
        for (auto& r : recs) {
            if (!r.odometer || r.classified_sites.empty()) continue;
            const auto& dom = r.odometer->domain();
            Rational worst(0);
            for (auto i : r.classified_sites) {
                const auto v = dom.site(i);
                const RationalPoint x{Rational(v.x, r.scale), Rational(v.y, r.scale)};
                const Rational gap = Rational((*r.odometer)[i], r.scale) - ref->fitted->value_at(x);
                worst = std::max(worst, gap < Rational(0) ? -gap : gap);
            }
            r.sup_odometer_gap = to_double(worst);
        }
    }
    return report;
}

nlohmann::json to_json(const WeightTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries)
        entries.push_back({{"edge", e.edge},
                           {"direction", {e.direction.x, e.direction.y}},
                           {"curve_weight", e.curve_weight},
                           {"strip_length", e.strip_length},
                           {"sites", e.sites},
                           {"deficit_sum", e.deficit_sum},
                           {"raw", e.raw},
                           {"rounded", e.rounded},
                           {"flagged", e.flagged}});
    return {{"scale", table.scale}, {"halfwidth", table.halfwidth}, {"entries", entries}};
}

WeightTable weight_table_from_json(const nlohmann::json& j) {
    WeightTable t;
    t.scale = j.at("scale").get<std::int64_t>();
    t.halfwidth = j.at("halfwidth").get<double>();
    for (const auto& e : j.at("entries")) {
        EdgeWeightEstimate est;
        est.edge = e.at("edge").get<std::size_t>();
        est.direction = {e.at("direction").at(0).get<std::int64_t>(), e.at("direction").at(1).get<std::int64_t>()};
        est.curve_weight = e.at("curve_weight").get<std::int64_t>();
        est.strip_length = e.at("strip_length").get<double>();
        est.sites = e.at("sites").get<std::size_t>();
        est.deficit_sum = e.at("deficit_sum").get<std::int64_t>();
        est.raw = e.at("raw").get<double>();
        est.rounded = e.at("rounded").get<std::int64_t>();
        est.flagged = e.at("flagged").get<bool>();
        t.entries.push_back(est);
    }
    return t;
}

nlohmann::json to_json(const MinimalityReport& report) {
    nlohmann::json probes = nlohmann::json::array();
    for (const auto& p : report.probes)
        probes.push_back({{"monomial", p.monomial},
                          {"exponent", {p.exponent.x, p.exponent.y}},
                          {"raise_breaks", p.raise_breaks()},
                          {"lower_breaks", p.lower_breaks()},
                          {"raised", admissibility_json(p.raised)},
                          {"lowered", admissibility_json(p.lowered)}});
    return {{"step", to_string(report.step)},
            {"precondition", report.precondition},
            {"precondition_detail", report.precondition_detail},
            {"pass", report.ok()},
            {"probes", probes}};
}

nlohmann::json to_json(const ScaleRecord& r) {
    nlohmann::json j;
    j["N"] = r.scale;
    j["ok"] = r.ok;
    if (!r.ok) j["failure"] = {{"stage", r.failed_stage}, {"error", r.error}};
    j["warnings"] = r.warnings;
    j["topplings_total"] = r.topplings_total;
    j["grains_lost"] = r.grains_lost;
    j["relax_seconds"] = r.relax_seconds;
    j["locus_size"] = r.locus_size;
    j["deficit_histogram"] = {{"1", r.deficit_histogram[1]}, {"2", r.deficit_histogram[2]}, {"3", r.deficit_histogram[3]}};
    j["boundary_locus_sites"] = r.boundary_locus_sites;
    j["regions"] = r.regions;
    j["coverage"] = r.coverage;
    j["hausdorff_to_next"] = optional_json(r.hausdorff_to_next);
    j["sup_odometer_gap"] = optional_json(r.sup_odometer_gap);
    j["locus_to_curve"] = optional_json(r.locus_to_curve);
    j["fitted_polynomial"] = r.fitted ? to_json(*r.fitted) : nlohmann::json(nullptr);
    j["polynomial"] = r.polynomial ? to_json(*r.polynomial) : nlohmann::json(nullptr);
    j["curve"] = r.curve ? to_json(*r.curve) : nlohmann::json(nullptr);
    j["area"] = optional_json(r.area);
    j["balancing"] = r.balancing_ok;
    nlohmann::json snapped = nlohmann::json::array();
    for (const auto& p : r.snapped_points) snapped.push_back(rational_point_json(p));
    j["snapped_points"] = snapped;
    j["weights"] = r.weights ? to_json(*r.weights) : nlohmann::json(nullptr);
    j["minimality"] = r.minimality ? to_json(*r.minimality) : nlohmann::json(nullptr);
    if (r.area_check) {
        const auto& a = *r.area_check;
        j["area_check"] = {{"fitted_area", a.fitted_area},
                           {"candidates", a.candidates},
                           {"admissible", a.admissible},
                           {"min_alternative_area", a.admissible ? nlohmann::json(a.min_alternative_area) : nlohmann::json(nullptr)},
                           {"consistent", a.consistent()}};
    } else {
        j["area_check"] = nullptr;
    }
    j["signature"] = r.signature;
    return j;
}

nlohmann::json to_json(const ConvergenceReport& report) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& v : report.polygon.vertices()) poly.push_back({v.x, v.y});
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : report.points) pts.push_back(plane_point_to_json(p));
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& r : report.records) recs.push_back(to_json(r));
    return {{"polygon", poly}, {"points", pts}, {"records", recs}};
}

}  // namespace tropsand
