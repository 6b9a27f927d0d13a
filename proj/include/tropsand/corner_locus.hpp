#pragma once

#include "tropsand/tropical_curve.hpp"

namespace tropsand {

/// Counterclockwise convex hull without collinear boundary points. Collinear input gives the two extremes.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

/// The weighted corner locus of a tropical polynomial, built from the regular subdivision of its support
/// induced by the coefficients: vertices are dual to cells, edges to interior cell edges, rays to
/// boundary cell edges, and edge weights are the lattice lengths of the dual edges. The result is normalized.
/// Throws EmptyCurve when a single monomial is minimal everywhere.
TropicalCurve corner_locus(const TropicalPolynomial& poly);

/// Indices of monomials that attain the minimum somewhere.
std::vector<std::size_t> active_monomials(const TropicalPolynomial& poly);

}  // namespace tropsand
