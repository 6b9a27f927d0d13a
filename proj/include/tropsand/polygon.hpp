#pragma once

#include <cstddef>
#include <vector>

#include "tropsand/lattice.hpp"

namespace tropsand {

/// Directed side of a polygon, from vertices[index] to vertices[index + 1].
struct Side {
    LatticePoint from;
    LatticePoint to;
    LatticePoint primitive;  ///< primitive direction from -> to

    /// Primitive normal pointing into the polygon.
    LatticePoint inward_normal() const { return {-primitive.y, primitive.x}; }
};

/// Non-degenerate convex lattice polygon with counterclockwise vertex order.
class LatticePolygon {
public:
    /// Validates and normalizes the orientation to counterclockwise.
    static LatticePolygon validate(std::vector<LatticePoint> vertices);

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<Side>& sides() const { return sides_; }
    std::size_t size() const { return vertices_.size(); }

    /// Twice the area (an integer for lattice polygons).
    std::int64_t double_area() const { return double_area_; }

    LatticePoint min_corner() const;
    LatticePoint max_corner() const;

    /// Closed containment test; boundary points are inside.
    bool contains(const RationalPoint& p) const;
    bool contains_interior(const RationalPoint& p) const;
    bool on_boundary(const RationalPoint& p) const { return contains(p) && !contains_interior(p); }

    /// Index of the vertex equal to p, or size() when p is not a vertex.
    std::size_t vertex_index(const RationalPoint& p) const;

    /// The two sides meeting at vertex i: (incoming side index, outgoing side index).
    std::pair<std::size_t, std::size_t> sides_at(std::size_t vertex) const {
        return {(vertex + size() - 1) % size(), vertex};
    }

    bool operator==(const LatticePolygon& o) const { return vertices_ == o.vertices_; }

private:
    std::vector<LatticePoint> vertices_;
    std::vector<Side> sides_;
    std::int64_t double_area_ = 0;
};

LatticePolygon validate_polygon(std::vector<LatticePoint> vertices);

}  // namespace tropsand
