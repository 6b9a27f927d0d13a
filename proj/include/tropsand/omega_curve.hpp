#pragma once

#include <vector>

#include "tropsand/corner_locus.hpp"
#include "tropsand/polygon.hpp"

namespace tropsand {

/// A balanced weighted graph inside a lattice polygon that meets the boundary exactly at the polygon's
/// vertices, together with the positive side labels d_s solving the outer balancing condition
///   sum over edges at a polygon vertex of m_e l_e = d_{s1} l_{s1} + d_{s2} l_{s2}.
class OmegaTropicalCurve {
public:
    const LatticePolygon& polygon() const { return polygon_; }
    const TropicalCurve& curve() const { return curve_; }
    /// d_s per side, indexed like polygon().sides().
    const std::vector<std::int64_t>& side_labels() const { return side_labels_; }

    friend OmegaTropicalCurve solve_side_labels(const TropicalCurve& curve, const LatticePolygon& polygon);

private:
    LatticePolygon polygon_;
    TropicalCurve curve_;
    std::vector<std::int64_t> side_labels_;
};

/// Validates the boundary contact and interior balancing, then solves the 2x2 outer balancing system at
/// each polygon vertex. Throws BoundaryViolation, Unbalanced, NoSolution or Inconsistent.
OmegaTropicalCurve solve_side_labels(const TropicalCurve& curve, const LatticePolygon& polygon);

/// Exact test that the polynomial is identically zero on every side of the polygon.
bool vanishes_on_boundary(const TropicalPolynomial& poly, const LatticePolygon& polygon);

/// The corner locus of the polynomial restricted to the closed polygon.
TropicalCurve restricted_corner_locus(const TropicalPolynomial& poly, const LatticePolygon& polygon);

/// An Omega-tropical curve paired with its Omega-tropical polynomial.
struct CurveWithPolynomial {
    OmegaTropicalCurve curve;
    TropicalPolynomial polynomial;
};

/// Checks that the polynomial vanishes on the boundary and that its restricted corner locus is the curve.
/// Throws BoundaryViolation or InvalidCurve otherwise.
CurveWithPolynomial pair_curve_with_polynomial(const OmegaTropicalCurve& curve, const TropicalPolynomial& poly);

/// Builds the Omega-tropical curve of a boundary-vanishing polynomial.
CurveWithPolynomial omega_curve_of(const TropicalPolynomial& poly, const LatticePolygon& polygon);

}  // namespace tropsand
