#pragma once

#include <optional>
#include <vector>

#include "tropsand/polygon.hpp"
#include "tropsand/tropical_polynomial.hpp"

namespace tropsand {

enum class EdgeKind { Segment, Ray, Line };

/// An edge of a weighted planar graph with rational slopes.
///   Segment: vertices[from] -> vertices[to]; direction is the primitive vector from -> to.
///   Ray:     starts at vertices[from] and runs along direction.
///   Line:    passes through anchor with the given direction; touches no vertex.
struct CurveEdge {
    EdgeKind kind = EdgeKind::Segment;
    std::size_t from = 0;
    std::size_t to = 0;
    RationalPoint anchor;
    LatticePoint direction;
    std::int64_t weight = 1;
};

/// Primitive integer vector along a non-zero rational vector.
LatticePoint primitive_direction(const RationalPoint& v);

class TropicalCurve {
public:
    const std::vector<RationalPoint>& vertices() const { return vertices_; }
    const std::vector<CurveEdge>& edges() const { return edges_; }

    /// Index of p, adding it if new.
    std::size_t add_vertex(const RationalPoint& p);
    std::optional<std::size_t> find_vertex(const RationalPoint& p) const;

    void add_segment(const RationalPoint& a, const RationalPoint& b, std::int64_t weight);
    void add_ray(const RationalPoint& start, LatticePoint direction, std::int64_t weight);
    void add_line(const RationalPoint& anchor, LatticePoint direction, std::int64_t weight);

    /// Splits segments and rays at vertices lying inside them, merges coincident edges by adding weights,
    /// and sorts everything. Two curves with the same support and weights normalize to equal values.
    void normalize();

    /// Edges at vertex i, each with its primitive direction oriented out of the vertex.
    std::vector<std::pair<LatticePoint, std::int64_t>> outgoing(std::size_t vertex) const;

    bool all_bounded() const;

    bool operator==(const TropicalCurve& o) const;

private:
    std::vector<RationalPoint> vertices_;
    std::vector<CurveEdge> edges_;
};

struct BalancingViolation {
    std::size_t vertex = 0;
    LatticePoint residual;
};

struct BalancingReport {
    std::vector<BalancingViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exact check of sum m_e l_e = 0 at every vertex.
BalancingReport check_balancing(const TropicalCurve& curve);
/// Same, skipping vertices on the boundary of the polygon.
BalancingReport check_interior_balancing(const TropicalCurve& curve, const LatticePolygon& polygon);

/// Sum over edges of |l_e| * m_e * |e|. Throws UnboundedEdge for rays and lines.
double tropical_area(const TropicalCurve& curve);

struct PassThroughReport {
    std::vector<bool> hit;              ///< per point
    std::vector<double> distance;       ///< per point, distance to the curve
    bool ok() const;
};

/// Each point must lie within tolerance of the curve; tolerance 0 is an exact rational containment test.
PassThroughReport passes_through(const TropicalCurve& curve, const std::vector<RationalPoint>& points, double tolerance);
PassThroughReport passes_through(const TropicalCurve& curve, const std::vector<PlanePoint>& points, double tolerance);

/// Euclidean distance from p to an edge.
double distance_to_edge(const TropicalCurve& curve, const CurveEdge& edge, const RationalPoint& p);
double distance_to_curve(const TropicalCurve& curve, const RationalPoint& p);

/// Exact containment of p in an edge (including its endpoints).
bool edge_contains(const TropicalCurve& curve, const CurveEdge& edge, const RationalPoint& p);

/// The part of the curve inside the closed polygon; crossing points with the boundary become vertices.
TropicalCurve clip_to_polygon(const TropicalCurve& curve, const LatticePolygon& polygon);

}  // namespace tropsand
