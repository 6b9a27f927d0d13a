#include "tropsand/minimality.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tropsand {

SnapResult snap_to_curve(const TropicalCurve& curve, const std::vector<RationalPoint>& points, double tolerance) {
    SnapResult out;
    for (const auto& p : points) {
        std::optional<RationalPoint> best;
        double best_d = tolerance;
        for (const auto& v : curve.vertices()) {
            const double d = std::hypot(to_double(v.x - p.x), to_double(v.y - p.y));
            if (d <= best_d) best_d = d, best = v;
        }
        if (!best) {
            for (const auto& e : curve.edges()) {
                const RationalPoint base = e.kind == EdgeKind::Line ? e.anchor : curve.vertices()[e.from];
                const RationalPoint dir =
                    e.kind == EdgeKind::Segment ? curve.vertices()[e.to] - base : RationalPoint::from(e.direction);
                const Rational len2 = dot(dir, dir);
                Rational t = dot(p - base, dir) / len2;
                if (e.kind != EdgeKind::Line) t = std::max(t, Rational(0));
                if (e.kind == EdgeKind::Segment) t = std::min(t, Rational(1));
                const RationalPoint q = base + dir * t;
                const double d = std::hypot(to_double(q.x - p.x), to_double(q.y - p.y));
                if (d <= best_d) best_d = d, best = q;
            }
        }
        out.points.push_back(best.value_or(p));
        out.snapped.push_back(best.has_value() && !(*best == p));
    }
    return out;
}

Admissibility check_admissible(const TropicalPolynomial& poly, const LatticePolygon& polygon,
                               const std::vector<RationalPoint>& points) {
    Admissibility a;
    a.vanishes_on_boundary = vanishes_on_boundary(poly, polygon);
    if (!a.vanishes_on_boundary) a.detail = "does not vanish on the boundary";
    try {
        const auto curve = restricted_corner_locus(poly, polygon);
        a.passes_through = passes_through(curve, points, 0.0).ok();
        if (!a.passes_through && a.detail.empty()) a.detail = "curve misses a point";
        solve_side_labels(curve, polygon);
        a.side_labels = true;
    } catch (const TropicalError& e) {
        if (a.detail.empty()) a.detail = e.what();
    }
    return a;
}

bool MinimalityReport::probes_ok() const {
    return std::all_of(probes.begin(), probes.end(), [](const auto& p) { return p.ok(); });
}

MinimalityReport minimality_probe(const TropicalPolynomial& poly, const LatticePolygon& polygon,
                                  const std::vector<RationalPoint>& points, const Rational& step) {
    if (step <= Rational(0)) throw std::invalid_argument("probe step must be positive");
    MinimalityReport report;
    report.step = step;
    const auto self = check_admissible(poly, polygon, points);
    report.precondition = self.ok();
    report.precondition_detail = self.detail;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto& m = poly.monomials()[i];
        CoefficientProbe probe;
        probe.monomial = i;
        probe.exponent = m.exponent;
        probe.raised = check_admissible(poly.with_coefficient(i, m.coefficient + step), polygon, points);
        probe.lowered = check_admissible(poly.with_coefficient(i, m.coefficient - step), polygon, points);
        report.probes.push_back(std::move(probe));
    }
    return report;
}

TropicalPolynomial side_polynomial(const LatticePolygon& polygon) {
    std::vector<Monomial> monomials;
    for (const auto& s : polygon.sides()) {
        const auto n = s.inward_normal();
        monomials.push_back({n, Rational(-dot(n, s.from))});
    }
    return TropicalPolynomial(std::move(monomials));
}

bool AreaConsistency::consistent() const {
    return !(fitted_area > min_alternative_area * (1.0 + 1e-9) + 1e-12);
}

AreaConsistency area_consistency(const TropicalPolynomial& fitted, const LatticePolygon& polygon,
                                 const std::vector<RationalPoint>& points, const AreaEnumerationOptions& options) {
    if (options.coefficient_step <= Rational(0)) throw std::invalid_argument("coefficient step must be positive");
    AreaConsistency out;
    out.fitted_area = tropical_area(restricted_corner_locus(fitted, polygon));

    const auto sides = side_polynomial(polygon);
    std::set<LatticePoint> side_exponents;
    for (const auto& m : sides.monomials()) side_exponents.insert(m.exponent);

    // max of the side polynomial over the polygon: at a polygon vertex or a corner-locus vertex inside
    Rational top(0);
    try {
        for (const auto& v : restricted_corner_locus(sides, polygon).vertices()) top = std::max(top, sides.value_at(v));
    } catch (const TropicalError&) {
    }

    // candidate (exponent, coefficient) pairs: F stays >= 0 at the polygon vertices and the monomial can
    // dip below the side polynomial somewhere
    std::vector<Monomial> extras;
    const auto r = options.exponent_radius;
    for (std::int64_t k = -r; k <= r; ++k)
        for (std::int64_t l = -r; l <= r; ++l) {
            const LatticePoint e{k, l};
            if (side_exponents.count(e)) continue;
            Rational lo = Rational(-dot(e, polygon.vertices().front()));
            Rational hi = lo;
            for (const auto& v : polygon.vertices()) {
                lo = std::max(lo, Rational(-dot(e, v)));
                hi = std::max(hi, Rational(-dot(e, v)));
            }
            hi += top;
            std::set<Rational> coeffs;
            for (Rational c = lo; c <= hi; c += options.coefficient_step) coeffs.insert(c);
            for (const auto& p : points) {
                const Rational c = sides.value_at(p) - dot(p, e);
                if (c >= lo && c <= hi) coeffs.insert(c);
            }
            for (const auto& c : coeffs) extras.push_back({e, c});
        }

    auto consider = [&](std::vector<Monomial> monomials) {
        ++out.candidates;
        const TropicalPolynomial candidate(std::move(monomials));
        if (!check_admissible(candidate, polygon, points).ok()) return;
        ++out.admissible;
        double area = 0;
        try {
            area = tropical_area(restricted_corner_locus(candidate, polygon));
        } catch (const TropicalError&) {
            return;
        }
        if (area < out.min_alternative_area) {
            out.min_alternative_area = area;
            out.best_alternative = candidate;
        }
    };

    consider(sides.monomials());
    for (std::size_t i = 0; i < extras.size(); ++i) {
        auto base = sides.monomials();
        base.push_back(extras[i]);
        consider(base);
        if (options.max_extra < 2) continue;
        for (std::size_t j = i + 1; j < extras.size(); ++j) {
            if (extras[j].exponent == extras[i].exponent) continue;
            auto two = base;
            two.push_back(extras[j]);
            consider(std::move(two));
        }
    }
    return out;
}

}  // namespace tropsand
