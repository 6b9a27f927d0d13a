#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tropsand/omega_curve.hpp"

namespace tropsand {

struct SnapResult {
    std::vector<RationalPoint> points;
    std::vector<bool> snapped;
};

/// Moves each point onto the curve when it lies within `tolerance`: to the nearest vertex if that is within
/// tolerance, otherwise to its exact projection on the nearest edge. Other points are returned unchanged.
SnapResult snap_to_curve(const TropicalCurve& curve, const std::vector<RationalPoint>& points, double tolerance);

/// An Omega-tropical polynomial whose curve passes through the given points.
struct Admissibility {
    bool vanishes_on_boundary = false;
    bool side_labels = false;
    bool passes_through = false;
    std::string detail;

    bool ok() const { return vanishes_on_boundary && side_labels && passes_through; }
};

/// Exact check: F = 0 on the boundary, its restricted corner locus is an Omega-tropical curve, and that
/// curve contains every point.
Admissibility check_admissible(const TropicalPolynomial& poly, const LatticePolygon& polygon,
                               const std::vector<RationalPoint>& points);

struct CoefficientProbe {
    std::size_t monomial = 0;
    LatticePoint exponent;
    Admissibility raised;
    Admissibility lowered;

    bool raise_breaks() const { return !raised.ok(); }
    bool lower_breaks() const { return !lowered.ok(); }
    bool ok() const { return raise_breaks() && lower_breaks(); }
};

struct MinimalityReport {
    Rational step{0};
    bool precondition = false;  ///< the polynomial itself is admissible
    std::string precondition_detail;
    std::vector<CoefficientProbe> probes;

    bool probes_ok() const;
    bool ok() const { return precondition && probes_ok(); }
};

/// Moves every coefficient up and down by `step` in turn. A minimal polynomial loses admissibility in
/// every direction; an admissible lowering means the polynomial was not pointwise minimal. The probes run
/// even when the precondition fails.
MinimalityReport minimality_probe(const TropicalPolynomial& poly, const LatticePolygon& polygon,
                                  const std::vector<RationalPoint>& points, const Rational& step);

/// min over sides of the affine form vanishing on that side and positive inside.
TropicalPolynomial side_polynomial(const LatticePolygon& polygon);

struct AreaEnumerationOptions {
    /// Extra exponents range over [-r, r]^2.
    std::int64_t exponent_radius = 2;
    /// Coefficient grid spacing; the coefficients that put the new monomial's corner through a point are
    /// always tried as well.
    Rational coefficient_step{1, 4};
    /// 1 or 2 monomials on top of the side monomials.
    std::size_t max_extra = 1;
};

struct AreaConsistency {
    double fitted_area = 0.0;
    std::size_t candidates = 0;
    std::size_t admissible = 0;
    double min_alternative_area = std::numeric_limits<double>::infinity();
    std::optional<TropicalPolynomial> best_alternative;

    /// fitted area <= every enumerated admissible alternative (up to 1e-9 relative)
    bool consistent() const;
};

/// Small-case enumeration of admissible polynomials built from the side monomials plus a few extra
/// monomials, compared by tropical symplectic area against the fitted curve. A consistency check only.
AreaConsistency area_consistency(const TropicalPolynomial& fitted, const LatticePolygon& polygon,
                                 const std::vector<RationalPoint>& points, const AreaEnumerationOptions& options = {});

}  // namespace tropsand
