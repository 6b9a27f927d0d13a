#include "tropsand/omega_curve.hpp"

namespace tropsand {

namespace {

using Kind = TropicalError::Kind;

std::string point_text(const RationalPoint& p) { return "(" + to_string(p.x) + "," + to_string(p.y) + ")"; }

}  // namespace

OmegaTropicalCurve solve_side_labels(const TropicalCurve& input, const LatticePolygon& polygon) {
    TropicalCurve curve = input;
    curve.normalize();
    if (!curve.all_bounded()) throw TropicalError(Kind::BoundaryViolation, "curve leaves the polygon along an unbounded edge");

    const auto& verts = curve.vertices();
    for (const auto& v : verts) {
        if (!polygon.contains(v)) throw TropicalError(Kind::BoundaryViolation, "vertex " + point_text(v) + " lies outside the polygon");
        if (polygon.on_boundary(v) && polygon.vertex_index(v) == polygon.size())
            throw TropicalError(Kind::BoundaryViolation, "curve touches the boundary at " + point_text(v));
    }
    for (const auto& e : curve.edges()) {
        const auto mid = (verts[e.from] + verts[e.to]) * Rational(1, 2);
        if (polygon.on_boundary(mid))
            throw TropicalError(Kind::BoundaryViolation, "edge through " + point_text(mid) + " runs along the boundary");
    }
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const auto corner = RationalPoint::from(polygon.vertices()[i]);
        if (!curve.find_vertex(corner) || curve.outgoing(*curve.find_vertex(corner)).empty())
            throw TropicalError(Kind::BoundaryViolation, "curve misses polygon vertex " + point_text(corner));
    }
    if (auto report = check_interior_balancing(curve, polygon); !report.ok()) {
        const auto& bad = report.violations.front();
        throw TropicalError(Kind::Unbalanced, "balancing fails at " + point_text(verts[bad.vertex]));
    }

    const auto n = polygon.size();
    std::vector<std::int64_t> labels(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto corner_index = *curve.find_vertex(RationalPoint::from(polygon.vertices()[i]));
        LatticePoint flux{0, 0};
        for (const auto& [dir, weight] : curve.outgoing(corner_index)) flux = flux + dir * weight;
        const auto [in_side, out_side] = polygon.sides_at(i);
        const LatticePoint a = -polygon.sides()[in_side].primitive;  // out of the vertex along the incoming side
        const LatticePoint b = polygon.sides()[out_side].primitive;
        const auto det = cross(a, b);
        const auto n1 = cross(flux, b);
        const auto n2 = cross(a, flux);
        if (n1 % det != 0 || n2 % det != 0 || n1 / det <= 0 || n2 / det <= 0)
            throw TropicalError(Kind::NoSolution, "outer balancing at vertex " + std::to_string(i) + " has no positive integer solution (" +
                                                      to_string(Rational(n1, det)) + ", " + to_string(Rational(n2, det)) + ")");
        for (auto [side, d] : {std::pair{in_side, n1 / det}, std::pair{out_side, n2 / det}}) {
            if (labels[side] != 0 && labels[side] != d)
                throw TropicalError(Kind::Inconsistent, "side " + std::to_string(side) + " gets labels " + std::to_string(labels[side]) +
                                                            " and " + std::to_string(d));
            labels[side] = d;
        }
    }
    OmegaTropicalCurve out;
    out.polygon_ = polygon;
    out.curve_ = std::move(curve);
    out.side_labels_ = std::move(labels);
    return out;
}

bool vanishes_on_boundary(const TropicalPolynomial& poly, const LatticePolygon& polygon) {
    // A concave function that is 0 at both ends and at the midpoint of a segment is 0 on all of it.
    for (const auto& s : polygon.sides()) {
        const auto a = RationalPoint::from(s.from);
        const auto b = RationalPoint::from(s.to);
        if (poly.value_at(a) != Rational(0) || poly.value_at(b) != Rational(0) || poly.value_at((a + b) * Rational(1, 2)) != Rational(0)) return false;
    }
    return true;
}

TropicalCurve restricted_corner_locus(const TropicalPolynomial& poly, const LatticePolygon& polygon) {
    return clip_to_polygon(corner_locus(poly), polygon);
}

CurveWithPolynomial pair_curve_with_polynomial(const OmegaTropicalCurve& curve, const TropicalPolynomial& poly) {
    if (!vanishes_on_boundary(poly, curve.polygon()))
        throw TropicalError(Kind::BoundaryViolation, "polynomial does not vanish on the polygon boundary");
    if (!(restricted_corner_locus(poly, curve.polygon()) == curve.curve()))
        throw TropicalError(Kind::InvalidCurve, "corner locus of the polynomial differs from the curve");
    return {curve, poly};
}

CurveWithPolynomial omega_curve_of(const TropicalPolynomial& poly, const LatticePolygon& polygon) {
    if (!vanishes_on_boundary(poly, polygon))
        throw TropicalError(Kind::BoundaryViolation, "polynomial does not vanish on the polygon boundary");
    return {solve_side_labels(restricted_corner_locus(poly, polygon), polygon), poly};
}

}  // namespace tropsand
