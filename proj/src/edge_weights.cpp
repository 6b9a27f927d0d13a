#include "tropsand/edge_weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "tropsand/region_fit.hpp"

namespace tropsand {

namespace {

struct Vec {
    double x = 0, y = 0;
};
Vec operator-(Vec a, Vec b) { return {a.x - b.x, a.y - b.y}; }
Vec operator+(Vec a, Vec b) { return {a.x + b.x, a.y + b.y}; }
Vec operator*(double s, Vec a) { return {s * a.x, s * a.y}; }
double dot(Vec a, Vec b) { return a.x * b.x + a.y * b.y; }
double norm(Vec a) { return std::hypot(a.x, a.y); }
Vec unit(Vec a) { return (1.0 / norm(a)) * a; }
Vec to_vec(const RationalPoint& p) { return {to_double(p.x), to_double(p.y)}; }
Vec to_vec(const LatticePoint& p) { return {static_cast<double>(p.x), static_cast<double>(p.y)}; }

double angle_between(Vec a, Vec b) { return std::acos(std::clamp(dot(unit(a), unit(b)), -1.0, 1.0)); }

struct Strip {
    Vec start;  // retreated endpoint
    Vec u, n;   // along, across
    double length = 0;
    double halfwidth = 0;

    std::array<Vec, 4> corners() const {
        const Vec a = start + halfwidth * n, b = start - halfwidth * n;
        const Vec along = length * u;
        return {a, b, b + along, a + along};
    }
    bool contains(Vec p) const {
        const Vec d = p - start;
        const double s = dot(d, u), t = dot(d, n);
        constexpr double eps = 1e-12;
        return s >= -eps && s <= length + eps && std::abs(t) <= halfwidth + eps;
    }
};

// separating axis test for two rectangles; touching boundaries do not count as overlap
bool overlaps(const Strip& a, const Strip& b) {
    const auto ca = a.corners(), cb = b.corners();
    for (Vec axis : {a.u, a.n, b.u, b.n}) {
        double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
        for (auto c : ca) amin = std::min(amin, dot(c, axis)), amax = std::max(amax, dot(c, axis));
        for (auto c : cb) bmin = std::min(bmin, dot(c, axis)), bmax = std::max(bmax, dot(c, axis));
        if (amax <= bmin + 1e-12 || bmax <= amin + 1e-12) return false;
    }
    return true;
}

}  // namespace

std::size_t WeightTable::flagged_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.flagged; }));
}

WeightTable estimate_edge_weights(const DeviationLocus& locus, const TropicalCurve& curve, double strip_halfwidth) {
    StripOptions options;
    options.halfwidth = strip_halfwidth;
    return estimate_edge_weights(locus, curve, options);
}

WeightTable estimate_edge_weights(const DeviationLocus& locus, const TropicalCurve& curve, const StripOptions& options) {
    const double scale = static_cast<double>(locus.scale);
    const double h = options.halfwidth.value_or(3.0 / scale);
    const double base_retreat = options.retreat.value_or(5.0 / scale);
    const double band = options.boundary_band.value_or(3.0 / scale);
    if (!(h > 0.0)) throw std::invalid_argument("strip halfwidth must be positive");

    const auto& verts = curve.vertices();
    const auto& edges = curve.edges();

    // retreat needed at vertex `at` for an edge leaving it along `dir`
    auto retreat_at = [&](std::size_t at, Vec dir, std::size_t self) {
        double r = base_retreat;
        for (std::size_t j = 0; j < edges.size(); ++j) {
            if (j == self) continue;
            const auto& e = edges[j];
            if (e.kind != EdgeKind::Segment) continue;
            Vec other;
            if (e.from == at) other = to_vec(e.direction);
            else if (e.to == at) other = -1.0 * to_vec(e.direction);
            else continue;
            const double theta = angle_between(dir, other);
            if (theta < std::numbers::pi - 1e-12) r = std::max(r, h / std::tan(theta / 2.0) * (1.0 + 1e-9));
        }
        if (options.polygon && options.polygon->on_boundary(verts[at])) {
            for (const auto& side : options.polygon->sides()) {
                Vec side_dir;
                if (side.from == side.to) continue;
                if (RationalPoint::from(side.from) == verts[at]) side_dir = to_vec(side.to - side.from);
                else if (RationalPoint::from(side.to) == verts[at]) side_dir = to_vec(side.from - side.to);
                else if (options.polygon->on_boundary(verts[at])) {
                    // endpoint in the middle of a side: only that side matters
                    const Vec a = to_vec(side.from), b = to_vec(side.to), p = to_vec(verts[at]);
                    const Vec d = b - a;
                    const double cr = (p - a).x * d.y - (p - a).y * d.x;
                    if (std::abs(cr) > 1e-12) continue;
                    side_dir = d;
                } else {
                    continue;
                }
                const double theta = angle_between(dir, side_dir);
                const double s = std::sin(theta);
                if (s < 1e-12) continue;
                r = std::max(r, (band + h * std::abs(std::cos(theta))) / s);
            }
        }
        return r;
    };

    WeightTable table;
    table.scale = locus.scale;
    table.halfwidth = h;

    std::vector<Strip> strips(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.kind != EdgeKind::Segment)
            throw TropicalError(TropicalError::Kind::UnboundedEdge, "weight estimation needs bounded edges");
        const Vec a = to_vec(verts[e.from]), b = to_vec(verts[e.to]);
        const Vec u = unit(b - a);
        const double ra = retreat_at(e.from, u, i);
        const double rb = retreat_at(e.to, -1.0 * u, i);
        Strip& s = strips[i];
        s.u = u;
        s.n = {-u.y, u.x};
        s.halfwidth = h;
        s.start = a + ra * u;
        s.length = std::max(0.0, norm(b - a) - ra - rb);

        EdgeWeightEstimate est;
        est.edge = i;
        est.direction = e.direction;
        est.curve_weight = e.weight;
        est.strip_length = s.length;
        table.entries.push_back(est);
    }

    for (std::size_t i = 0; i < strips.size(); ++i)
        for (std::size_t j = i + 1; j < strips.size(); ++j)
            if (strips[i].length > 0 && strips[j].length > 0 && overlaps(strips[i], strips[j]))
                throw AnalysisError(AnalysisError::Kind::OverlappingStrips,
                                    "strips of edges " + std::to_string(i) + " and " + std::to_string(j) + " overlap");

    for (const auto& site : locus.sites) {
        const Vec p{static_cast<double>(site.site.x) / scale, static_cast<double>(site.site.y) / scale};
        for (std::size_t i = 0; i < strips.size(); ++i) {
            if (strips[i].length <= 0 || !strips[i].contains(p)) continue;
            table.entries[i].sites += 1;
            table.entries[i].deficit_sum += site.deficit;
            break;  // strips are disjoint
        }
    }

    for (auto& est : table.entries) {
        if (est.strip_length > 0) {
            const double lnorm = norm(to_vec(est.direction));
            est.raw = static_cast<double>(est.deficit_sum) / (scale * lnorm * est.strip_length);
        }
        est.rounded = std::max<std::int64_t>(1, std::llround(est.raw));
        const double nearest = std::round(est.raw);
        est.flagged = est.strip_length <= 0 || std::abs(est.raw - nearest) > options.flag_distance ||
                      std::abs(est.raw - static_cast<double>(est.rounded)) > options.flag_distance;
    }
    return table;
}

}  // namespace tropsand
