#pragma once

#include <optional>
#include <vector>

#include "tropsand/relax.hpp"
#include "tropsand/tropical_polynomial.hpp"

namespace tropsand {

/// F~_N(v / N) = F_N(v) / N, kept as integer numerators over the scale.
struct ScaledOdometer {
    Odometer counts;

    std::int64_t scale() const { return counts.domain().scale(); }
    Rational value(std::size_t i) const { return Rational(counts[i], scale()); }
    Rational max_value() const;
};

ScaledOdometer scaled_odometer(const RelaxationResult& result);
ScaledOdometer scaled_odometer(const Odometer& odometer);

/// A connected set of sites on which F_N(v) = k v.x + l v.y + N * offset exactly.
struct LinearRegion {
    LatticePoint gradient;
    std::int64_t intercept = 0;  ///< F_N(v) - k v.x - l v.y, i.e. N * offset
    Rational offset{0};
    std::vector<std::size_t> sites;
};

struct LinearRegionDecomposition {
    DomainPtr domain;
    std::vector<LinearRegion> regions;
    std::vector<std::size_t> unclassified;

    std::int64_t scale() const { return domain->scale(); }
    /// Fraction of sites that belong to a region.
    double coverage() const;
};

struct FitOptions {
    /// Sites with a non-site within this Chebyshev distance are never classified.
    int boundary_band = 2;
    /// Connected components smaller than this stay unclassified.
    std::size_t min_region_sites = 8;
};

class AnalysisError : public std::runtime_error {
public:
    enum class Kind { NoRegions, InconsistentRegions, OverlappingStrips, EmptySet, AnchorFailed };

    AnalysisError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Flood-fills maximal 4-connected site sets whose forward differences equal a constant integer gradient
/// on the whole 3x3 neighborhood of each member. Throws NoRegions when nothing can be classified.
LinearRegionDecomposition fit_linear_regions(const Odometer& odometer, const FitOptions& options = {});

struct AssembledPolynomial {
    TropicalPolynomial polynomial;
    /// Classified sites where the polynomial differs from F~_N.
    std::size_t mismatched_sites = 0;
    /// max |polynomial| over boundary sites of the domain, scaled.
    Rational max_boundary_value{0};
    /// max_boundary_value <= 2 / N
    bool boundary_ok = false;
};

/// One monomial per fitted gradient, with the fitted offset. Regions sharing a gradient must agree
/// within 1/N (the smaller offset wins); otherwise throws InconsistentRegions.
AssembledPolynomial assemble_polynomial(const LinearRegionDecomposition& decomposition, const LatticePolygon& polygon,
                                        std::int64_t scale);

/// Shifts the fitted coefficients so the polynomial vanishes exactly on the polygon boundary:
/// removes the common boundary residual, then sets every monomial within snap_tolerance of zero at a
/// polygon vertex to vanish there. Throws AnchorFailed if the result still does not vanish on the boundary.
TropicalPolynomial anchor_to_boundary(const TropicalPolynomial& fitted, const LatticePolygon& polygon, Rational snap_tolerance);

}  // namespace tropsand
