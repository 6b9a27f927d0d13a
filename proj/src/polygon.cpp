#include "tropsand/polygon.hpp"

#include <algorithm>

namespace tropsand {

namespace {

std::int64_t signed_double_area(const std::vector<LatticePoint>& v) {
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += cross(v[i], v[(i + 1) % v.size()]);
    return acc;
}

}  // namespace

LatticePolygon LatticePolygon::validate(std::vector<LatticePoint> vertices) {
    using Kind = LatticeError::Kind;
    if (vertices.size() < 3)
        throw LatticeError(Kind::TooFewVertices, "polygon needs at least 3 vertices, got " + std::to_string(vertices.size()));
    for (auto& p : vertices) {
        if (p.x <= -kCoordinateLimit || p.x >= kCoordinateLimit || p.y <= -kCoordinateLimit || p.y >= kCoordinateLimit)
            throw LatticeError(Kind::ScaleOverflow, "polygon vertex outside the coordinate range");
    }
    const auto area = signed_double_area(vertices);
    if (area == 0) {
        // Every vertex is collinear with the first two distinct ones; the third vertex is the first offender.
        throw LatticeError(Kind::DegenerateArea, "polygon has zero area (vertex 2)");
    }
    if (area < 0) std::reverse(vertices.begin(), vertices.end());

    const auto n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const auto prev = vertices[(i + n - 1) % n];
        const auto cur = vertices[i];
        const auto next = vertices[(i + 1) % n];
        if (cur == next || cur == prev)
            throw LatticeError(Kind::CollinearVertexChain, "repeated vertex at index " + std::to_string(i));
        const auto turn = cross(cur - prev, next - cur);
        if (turn == 0)
            throw LatticeError(Kind::CollinearVertexChain, "collinear vertex chain at vertex " + std::to_string(i));
        if (turn < 0) throw LatticeError(Kind::NonConvex, "reflex vertex at index " + std::to_string(i));
    }
    // Left turns everywhere still admit star polygons winding twice; the fan from vertex 0 rules them out.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (cross(vertices[i] - vertices[0], vertices[i + 1] - vertices[0]) <= 0)
            throw LatticeError(Kind::NonConvex, "polygon winds more than once at vertex " + std::to_string(i + 1));
    }

    LatticePolygon poly;
    poly.vertices_ = std::move(vertices);
    poly.double_area_ = std::abs(area);
    for (std::size_t i = 0; i < n; ++i) {
        const auto from = poly.vertices_[i];
        const auto to = poly.vertices_[(i + 1) % n];
        poly.sides_.push_back({from, to, primitive_vector(to - from)});
    }
    return poly;
}

LatticePolygon validate_polygon(std::vector<LatticePoint> vertices) { return LatticePolygon::validate(std::move(vertices)); }

LatticePoint LatticePolygon::min_corner() const {
    LatticePoint m = vertices_.front();
    for (auto v : vertices_) m = {std::min(m.x, v.x), std::min(m.y, v.y)};
    return m;
}

LatticePoint LatticePolygon::max_corner() const {
    LatticePoint m = vertices_.front();
    for (auto v : vertices_) m = {std::max(m.x, v.x), std::max(m.y, v.y)};
    return m;
}

bool LatticePolygon::contains(const RationalPoint& p) const {
    for (const auto& s : sides_) {
        if (cross(RationalPoint::from(s.to - s.from), p - RationalPoint::from(s.from)) < 0) return false;
    }
    return true;
}

bool LatticePolygon::contains_interior(const RationalPoint& p) const {
    for (const auto& s : sides_) {
        if (cross(RationalPoint::from(s.to - s.from), p - RationalPoint::from(s.from)) <= 0) return false;
    }
    return true;
}

std::size_t LatticePolygon::vertex_index(const RationalPoint& p) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (RationalPoint::from(vertices_[i]) == p) return i;
    return vertices_.size();
}

}  // namespace tropsand
