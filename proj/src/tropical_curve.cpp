#include "tropsand/tropical_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <tuple>

namespace tropsand {

namespace {

LatticePoint canonical_line_direction(LatticePoint d) {
    if (d.x < 0 || (d.x == 0 && d.y < 0)) return -d;
    return d;
}

/// Point of the line through anchor with direction d that is closest to the origin.
RationalPoint canonical_line_anchor(const RationalPoint& anchor, LatticePoint d) {
    const Rational t = dot(anchor, d) / Rational(dot(d, d));
    return anchor - RationalPoint::from(d) * t;
}

struct Param {
    Rational t{0};
    std::size_t vertex = 0;
};

/// Parameter t with p = base + t * dir, when p lies on that line.
std::optional<Rational> line_parameter(const RationalPoint& base, const RationalPoint& dir, const RationalPoint& p) {
    const auto rel = p - base;
    if (cross(dir, rel) != Rational(0)) return std::nullopt;
    return dot(rel, dir) / dot(dir, dir);
}

}  // namespace

LatticePoint primitive_direction(const RationalPoint& v) {
    if (v.x == Rational(0) && v.y == Rational(0)) throw LatticeError(LatticeError::Kind::ZeroVector, "zero direction");
    const auto l = std::lcm(v.x.denominator(), v.y.denominator());
    return primitive_vector({v.x.numerator() * (l / v.x.denominator()), v.y.numerator() * (l / v.y.denominator())});
}

std::optional<std::size_t> TropicalCurve::find_vertex(const RationalPoint& p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == p) return i;
    return std::nullopt;
}

std::size_t TropicalCurve::add_vertex(const RationalPoint& p) {
    if (auto i = find_vertex(p)) return *i;
    vertices_.push_back(p);
    return vertices_.size() - 1;
}

void TropicalCurve::add_segment(const RationalPoint& a, const RationalPoint& b, std::int64_t weight) {
    if (a == b) throw TropicalError(TropicalError::Kind::InvalidCurve, "degenerate segment");
    if (weight <= 0) throw TropicalError(TropicalError::Kind::InvalidCurve, "weights must be positive");
    const auto i = add_vertex(a);
    const auto j = add_vertex(b);
    edges_.push_back({EdgeKind::Segment, i, j, {}, primitive_direction(b - a), weight});
}

void TropicalCurve::add_ray(const RationalPoint& start, LatticePoint direction, std::int64_t weight) {
    if (weight <= 0) throw TropicalError(TropicalError::Kind::InvalidCurve, "weights must be positive");
    const auto i = add_vertex(start);
    edges_.push_back({EdgeKind::Ray, i, i, {}, primitive_vector(direction), weight});
}

void TropicalCurve::add_line(const RationalPoint& anchor, LatticePoint direction, std::int64_t weight) {
    if (weight <= 0) throw TropicalError(TropicalError::Kind::InvalidCurve, "weights must be positive");
    edges_.push_back({EdgeKind::Line, 0, 0, anchor, primitive_vector(direction), weight});
}

void TropicalCurve::normalize() {
    // Split every edge at the vertices it passes through.
    struct Piece {
        EdgeKind kind;
        RationalPoint a;
        RationalPoint b;
        LatticePoint direction;
        std::int64_t weight;
    };
    std::vector<Piece> pieces;
    for (const auto& e : edges_) {
        RationalPoint base = e.kind == EdgeKind::Line ? e.anchor : vertices_[e.from];
        RationalPoint dir = e.kind == EdgeKind::Segment ? vertices_[e.to] - vertices_[e.from] : RationalPoint::from(e.direction);
        std::vector<Param> cuts;
        for (std::size_t v = 0; v < vertices_.size(); ++v) {
            auto t = line_parameter(base, dir, vertices_[v]);
            if (!t) continue;
            if (e.kind == EdgeKind::Segment && (*t < Rational(0) || *t > Rational(1))) continue;
            if (e.kind == EdgeKind::Ray && *t < Rational(0)) continue;
            cuts.push_back({*t, v});
        }
        std::sort(cuts.begin(), cuts.end(), [](const Param& l, const Param& r) { return l.t < r.t; });
        const auto step = primitive_direction(dir);
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c)
            pieces.push_back({EdgeKind::Segment, vertices_[cuts[c].vertex], vertices_[cuts[c + 1].vertex], step, e.weight});
        if (e.kind == EdgeKind::Ray) pieces.push_back({EdgeKind::Ray, vertices_[cuts.back().vertex], {}, step, e.weight});
        if (e.kind == EdgeKind::Line) {
            if (cuts.empty()) {
                pieces.push_back({EdgeKind::Line, base, {}, step, e.weight});
            } else {
                pieces.push_back({EdgeKind::Ray, vertices_[cuts.front().vertex], {}, -step, e.weight});
                pieces.push_back({EdgeKind::Ray, vertices_[cuts.back().vertex], {}, step, e.weight});
            }
        }
    }

    // Canonical vertex order: sorted, restricted to vertices that carry an edge.
    std::vector<RationalPoint> used;
    for (const auto& p : pieces) {
        if (p.kind == EdgeKind::Line) continue;
        used.push_back(p.a);
        if (p.kind == EdgeKind::Segment) used.push_back(p.b);
    }
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    auto index_of = [&](const RationalPoint& p) {
        return static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), p) - used.begin());
    };

    using Key = std::tuple<int, std::size_t, std::size_t, LatticePoint, Rational, Rational>;
    std::map<Key, std::int64_t> merged;
    for (const auto& p : pieces) {
        switch (p.kind) {
            case EdgeKind::Segment: {
                auto i = index_of(p.a), j = index_of(p.b);
                auto d = p.direction;
                if (j < i) {
                    std::swap(i, j);
                    d = -d;
                }
                merged[{0, i, j, d, Rational(0), Rational(0)}] += p.weight;
                break;
            }
            case EdgeKind::Ray:
                merged[{1, index_of(p.a), 0, p.direction, Rational(0), Rational(0)}] += p.weight;
                break;
            case EdgeKind::Line: {
                const auto d = canonical_line_direction(p.direction);
                const auto anchor = canonical_line_anchor(p.a, d);
                merged[{2, 0, 0, d, anchor.x, anchor.y}] += p.weight;
                break;
            }
        }
    }
    edges_.clear();
    for (const auto& [key, weight] : merged) {
        const auto& [kind, i, j, d, ax, ay] = key;
        CurveEdge e;
        e.kind = kind == 0 ? EdgeKind::Segment : kind == 1 ? EdgeKind::Ray : EdgeKind::Line;
        e.from = i;
        e.to = kind == 0 ? j : i;
        e.anchor = {ax, ay};
        e.direction = d;
        e.weight = weight;
        edges_.push_back(e);
    }
    vertices_ = std::move(used);
}

std::vector<std::pair<LatticePoint, std::int64_t>> TropicalCurve::outgoing(std::size_t vertex) const {
    std::vector<std::pair<LatticePoint, std::int64_t>> out;
    for (const auto& e : edges_) {
        if (e.kind == EdgeKind::Line) continue;
        if (e.from == vertex) out.emplace_back(e.direction, e.weight);
        if (e.kind == EdgeKind::Segment && e.to == vertex) out.emplace_back(-e.direction, e.weight);
    }
    return out;
}

bool TropicalCurve::all_bounded() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const CurveEdge& e) { return e.kind == EdgeKind::Segment; });
}

bool TropicalCurve::operator==(const TropicalCurve& o) const {
    auto a = *this, b = o;
    a.normalize();
    b.normalize();
    if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const auto &x = a.edges_[i], &y = b.edges_[i];
        if (x.kind != y.kind || x.from != y.from || x.to != y.to || !(x.anchor == y.anchor) || x.direction != y.direction ||
            x.weight != y.weight)
            return false;
    }
    return true;
}

BalancingReport check_balancing(const TropicalCurve& curve) {
    BalancingReport report;
    for (std::size_t v = 0; v < curve.vertices().size(); ++v) {
        LatticePoint sum{0, 0};
        for (const auto& [dir, weight] : curve.outgoing(v)) sum = sum + dir * weight;
        if (sum != LatticePoint{0, 0}) report.violations.push_back({v, sum});
    }
    return report;
}

BalancingReport check_interior_balancing(const TropicalCurve& curve, const LatticePolygon& polygon) {
    BalancingReport report;
    for (const auto& violation : check_balancing(curve).violations)
        if (!polygon.on_boundary(curve.vertices()[violation.vertex])) report.violations.push_back(violation);
    return report;
}

double tropical_area(const TropicalCurve& curve) {
    double area = 0.0;
    for (const auto& e : curve.edges()) {
        if (e.kind != EdgeKind::Segment)
            throw TropicalError(TropicalError::Kind::UnboundedEdge, "tropical area of an unbounded edge");
        const auto d = curve.vertices()[e.to] - curve.vertices()[e.from];
        const double length = std::hypot(to_double(d.x), to_double(d.y));
        const double norm = std::hypot(static_cast<double>(e.direction.x), static_cast<double>(e.direction.y));
        area += norm * static_cast<double>(e.weight) * length;
    }
    return area;
}

bool PassThroughReport::ok() const {
    return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool edge_contains(const TropicalCurve& curve, const CurveEdge& edge, const RationalPoint& p) {
    const RationalPoint base = edge.kind == EdgeKind::Line ? edge.anchor : curve.vertices()[edge.from];
    const RationalPoint dir = edge.kind == EdgeKind::Segment ? curve.vertices()[edge.to] - base : RationalPoint::from(edge.direction);
    auto t = line_parameter(base, dir, p);
    if (!t) return false;
    switch (edge.kind) {
        case EdgeKind::Segment: return *t >= Rational(0) && *t <= Rational(1);
        case EdgeKind::Ray: return *t >= Rational(0);
        case EdgeKind::Line: return true;
    }
    return false;
}

double distance_to_edge(const TropicalCurve& curve, const CurveEdge& edge, const RationalPoint& p) {
    const RationalPoint base_r = edge.kind == EdgeKind::Line ? edge.anchor : curve.vertices()[edge.from];
    const double bx = to_double(base_r.x), by = to_double(base_r.y);
    double dx = 0, dy = 0;
    if (edge.kind == EdgeKind::Segment) {
        const auto& end = curve.vertices()[edge.to];
        dx = to_double(end.x) - bx;
        dy = to_double(end.y) - by;
    } else {
        dx = static_cast<double>(edge.direction.x);
        dy = static_cast<double>(edge.direction.y);
    }
    const double px = to_double(p.x) - bx, py = to_double(p.y) - by;
    double t = (px * dx + py * dy) / (dx * dx + dy * dy);
    if (edge.kind != EdgeKind::Line) t = std::max(t, 0.0);
    if (edge.kind == EdgeKind::Segment) t = std::min(t, 1.0);
    return std::hypot(px - t * dx, py - t * dy);
}

double distance_to_curve(const TropicalCurve& curve, const RationalPoint& p) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : curve.vertices()) best = std::min(best, std::hypot(to_double(v.x - p.x), to_double(v.y - p.y)));
    for (const auto& e : curve.edges()) best = std::min(best, distance_to_edge(curve, e, p));
    return best;
}

PassThroughReport passes_through(const TropicalCurve& curve, const std::vector<RationalPoint>& points, double tolerance) {
    PassThroughReport report;
    for (const auto& p : points) {
        const double d = distance_to_curve(curve, p);
        bool hit = false;
        if (tolerance <= 0.0) {
            hit = curve.find_vertex(p).has_value() ||
                  std::any_of(curve.edges().begin(), curve.edges().end(),
                              [&](const CurveEdge& e) { return edge_contains(curve, e, p); });
        } else {
            hit = d <= tolerance;
        }
        report.hit.push_back(hit);
        report.distance.push_back(hit && tolerance <= 0.0 ? 0.0 : d);
    }
    return report;
}

PassThroughReport passes_through(const TropicalCurve& curve, const std::vector<PlanePoint>& points, double tolerance) {
    std::vector<RationalPoint> exact;
    for (const auto& p : points) exact.push_back(p.to_rational());
    return passes_through(curve, exact, tolerance);
}

TropicalCurve clip_to_polygon(const TropicalCurve& curve, const LatticePolygon& polygon) {
    TropicalCurve out;
    for (const auto& e : curve.edges()) {
        const RationalPoint base = e.kind == EdgeKind::Line ? e.anchor : curve.vertices()[e.from];
        const RationalPoint dir =
            e.kind == EdgeKind::Segment ? curve.vertices()[e.to] - base : RationalPoint::from(e.direction);
        std::optional<Rational> lo, hi;
        if (e.kind != EdgeKind::Line) lo = Rational(0);
        if (e.kind == EdgeKind::Segment) hi = Rational(1);
        bool empty = false;
        for (const auto& s : polygon.sides()) {
            // cross(side, base + t dir - from) >= 0
            const auto side = RationalPoint::from(s.to - s.from);
            const Rational c0 = cross(side, base - RationalPoint::from(s.from));
            const Rational c1 = cross(side, dir);
            if (c1 == Rational(0)) {
                if (c0 < Rational(0)) empty = true;
                continue;
            }
            const Rational t = -c0 / c1;
            if (c1 > Rational(0)) {
                if (!lo || t > *lo) lo = t;
            } else {
                if (!hi || t < *hi) hi = t;
            }
        }
        if (empty || !lo || !hi || *lo >= *hi) continue;
        out.add_segment(base + dir * *lo, base + dir * *hi, e.weight);
    }
    out.normalize();
    return out;
}

}  // namespace tropsand
