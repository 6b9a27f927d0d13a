#include "tropsand/region_fit.hpp"

#include <algorithm>
#include <map>

#include "tropsand/omega_curve.hpp"

namespace tropsand {

namespace {

using Kind = AnalysisError::Kind;

struct Gradient {
    std::int64_t gx = 0;
    std::int64_t gy = 0;
    bool valid = false;
};

}  // namespace

Rational ScaledOdometer::max_value() const {
    std::int64_t best = 0;
    for (auto v : counts.values()) best = std::max(best, v);
    return Rational(best, scale());
}

ScaledOdometer scaled_odometer(const Odometer& odometer) { return {odometer}; }
ScaledOdometer scaled_odometer(const RelaxationResult& result) { return {result.odometer}; }

double LinearRegionDecomposition::coverage() const {
    std::size_t covered = 0;
    for (const auto& r : regions) covered += r.sites.size();
    return domain->size() == 0 ? 0.0 : static_cast<double>(covered) / static_cast<double>(domain->size());
}

LinearRegionDecomposition fit_linear_regions(const Odometer& odometer, const FitOptions& options) {
    const auto& domain = odometer.domain();
    const auto n = domain.size();

    // Forward differences wherever both neighbors are sites.
    std::vector<Gradient> grad(n);
    domain.for_each_site([&](std::size_t i, LatticePoint v) {
        auto right = domain.find(v + LatticePoint{1, 0});
        auto up = domain.find(v + LatticePoint{0, 1});
        if (right && up) grad[i] = {odometer[*right] - odometer[i], odometer[*up] - odometer[i], true};
    });

    // A site is classifiable if it is away from the boundary and its 3x3 neighborhood shares one gradient.
    std::vector<bool> classifiable(n, false);
    const int band = std::max(options.boundary_band, 1);
    domain.for_each_site([&](std::size_t i, LatticePoint v) {
        for (int dy = -band; dy <= band; ++dy)
            for (int dx = -band; dx <= band; ++dx)
                if (!domain.contains(v + LatticePoint{dx, dy})) return;
        if (!grad[i].valid) return;
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                const auto& g = grad[domain.index(v + LatticePoint{dx, dy})];
                if (!g.valid || g.gx != grad[i].gx || g.gy != grad[i].gy) return;
            }
        classifiable[i] = true;
    });

    LinearRegionDecomposition out;
    out.domain = odometer.domain_ptr();
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> stack;
    domain.for_each_site([&](std::size_t seed, LatticePoint) {
        if (visited[seed]) return;
        visited[seed] = true;
        if (!classifiable[seed]) {
            out.unclassified.push_back(seed);
            return;
        }
        LinearRegion region;
        region.gradient = {grad[seed].gx, grad[seed].gy};
        stack.assign(1, seed);
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            region.sites.push_back(i);
            const auto v = domain.site(i);
            for (auto step : kLatticeSteps) {
                auto j = domain.find(v + step);
                if (!j || visited[*j] || !classifiable[*j]) continue;
                if (grad[*j].gx != region.gradient.x || grad[*j].gy != region.gradient.y) continue;
                visited[*j] = true;
                stack.push_back(*j);
            }
        }
        std::sort(region.sites.begin(), region.sites.end());
        if (region.sites.size() < options.min_region_sites) {
            out.unclassified.insert(out.unclassified.end(), region.sites.begin(), region.sites.end());
            return;
        }
        const auto v = domain.site(region.sites.front());
        region.intercept = odometer[region.sites.front()] - region.gradient.x * v.x - region.gradient.y * v.y;
        region.offset = Rational(region.intercept, domain.scale());
        out.regions.push_back(std::move(region));
    });
    std::sort(out.unclassified.begin(), out.unclassified.end());
    if (out.regions.empty()) throw AnalysisError(Kind::NoRegions, "no linear region found; the scale is probably too small");
    return out;
}

AssembledPolynomial assemble_polynomial(const LinearRegionDecomposition& decomposition, const LatticePolygon& polygon,
                                        std::int64_t scale) {
    if (decomposition.regions.empty()) throw AnalysisError(Kind::NoRegions, "empty decomposition");
    if (!(decomposition.domain->polygon() == polygon) || decomposition.scale() != scale)
        throw AnalysisError(Kind::InconsistentRegions, "decomposition was fitted on a different domain");
    std::map<LatticePoint, Rational> offsets;
    for (const auto& r : decomposition.regions) {
        auto [it, inserted] = offsets.emplace(r.gradient, r.offset);
        if (inserted) continue;
        if (abs(it->second - r.offset) > Rational(1, scale))
            throw AnalysisError(Kind::InconsistentRegions,
                                "regions with gradient (" + std::to_string(r.gradient.x) + "," + std::to_string(r.gradient.y) +
                                    ") disagree on the offset: " + to_string(it->second) + " vs " + to_string(r.offset));
        it->second = std::min(it->second, r.offset);
    }
    std::vector<Monomial> monomials;
    for (const auto& [g, a] : offsets) monomials.push_back({g, a});
    AssembledPolynomial out{TropicalPolynomial(std::move(monomials)), 0, Rational(0), false};

    const auto& domain = *decomposition.domain;
    for (const auto& r : decomposition.regions)
        for (auto i : r.sites) {
            const auto v = domain.site(i);
            const RationalPoint x{Rational(v.x, scale), Rational(v.y, scale)};
            const Rational fitted = r.offset + dot(x, r.gradient);
            if (out.polynomial.value_at(x) != fitted) ++out.mismatched_sites;
        }
    domain.for_each_site([&](std::size_t, LatticePoint v) {
        if (!domain.on_polygon_boundary(v)) return;
        const RationalPoint x{Rational(v.x, scale), Rational(v.y, scale)};
        out.max_boundary_value = std::max(out.max_boundary_value, abs(out.polynomial.value_at(x)));
    });
    out.boundary_ok = out.max_boundary_value <= Rational(2, scale);
    return out;
}

TropicalPolynomial anchor_to_boundary(const TropicalPolynomial& fitted, const LatticePolygon& polygon, Rational snap_tolerance) {
    // Residual of each side's vanishing monomial (the one minimal at the side midpoint and orthogonal to it).
    std::map<Rational, int> residual_votes;
    for (const auto& s : polygon.sides()) {
        const auto mid = (RationalPoint::from(s.from) + RationalPoint::from(s.to)) * Rational(1, 2);
        const auto eval = fitted.evaluate(mid);
        for (auto g : eval.argmin) {
            if (dot(g, s.primitive) != 0) continue;
            ++residual_votes[eval.value];
        }
    }
    Rational shift(0);
    int best_votes = 0;
    for (const auto& [residual, votes] : residual_votes)
        if (votes > best_votes || (votes == best_votes && abs(residual) < abs(shift))) {
            shift = residual;
            best_votes = votes;
        }

    auto monomials = fitted.shifted(-shift).monomials();
    for (auto corner : polygon.vertices()) {
        const auto v = RationalPoint::from(corner);
        for (auto& m : monomials) {
            if (abs(m.value_at(v)) <= snap_tolerance) m.coefficient = -dot(v, m.exponent);
        }
    }
    TropicalPolynomial anchored(std::move(monomials));
    if (!vanishes_on_boundary(anchored, polygon))
        throw AnalysisError(Kind::AnchorFailed, "fitted polynomial cannot be made to vanish on the polygon boundary");
    return anchored;
}

}  // namespace tropsand
