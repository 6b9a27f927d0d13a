#include "tropsand/corner_locus.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tropsand {

namespace {

struct Lifted {
    LatticePoint exponent;
    Rational height;
    std::size_t index;
};

/// A lower face of the lifted support: the point x where the face's monomials tie and the face members.
struct LowerFace {
    RationalPoint vertex;
    std::set<std::size_t> members;
};

bool collinear(const std::vector<Lifted>& pts, std::size_t& a, std::size_t& b) {
    a = 0;
    b = 1;
    for (std::size_t i = 2; i < pts.size(); ++i) {
        if (cross(pts[b].exponent - pts[a].exponent, pts[i].exponent - pts[a].exponent) != 0) return false;
    }
    return true;
}

TropicalCurve locus_1d(const std::vector<Lifted>& pts) {
    const auto origin = pts[0].exponent;
    const auto u = primitive_vector(pts[1].exponent - origin);
    struct Chain {
        Rational t;
        Rational a;
    };
    std::vector<Chain> chain;
    for (const auto& p : pts) chain.push_back({Rational(dot(p.exponent - origin, u) / dot(u, u)), p.height});
    std::sort(chain.begin(), chain.end(), [](const Chain& l, const Chain& r) { return l.t < r.t; });
    std::vector<Chain> hull;
    for (const auto& c : chain) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& m = hull.back();
            // drop m unless it lies strictly below the chord o -> c
            if ((m.t - o.t) * (c.a - o.a) - (m.a - o.a) * (c.t - o.t) <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(c);
    }
    if (hull.size() < 2) throw TropicalError(TropicalError::Kind::EmptyCurve, "one monomial dominates everywhere");
    TropicalCurve curve;
    const LatticePoint normal{-u.y, u.x};
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const auto& lo = hull[i];
        const auto& hi = hull[i + 1];
        // origin.x + t u.x: ties where (t_lo - t_hi) (u . x) = a_hi - a_lo
        const Rational s = (hi.a - lo.a) / (lo.t - hi.t);
        const RationalPoint anchor = RationalPoint::from(u) * (s / Rational(dot(u, u)));
        curve.add_line(anchor, normal, (hi.t - lo.t).numerator());
    }
    curve.normalize();
    return curve;
}

std::vector<LowerFace> lower_faces(const std::vector<Lifted>& pts) {
    std::map<RationalPoint, std::set<std::size_t>> faces;
    const auto n = pts.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                const auto e1 = pts[j].exponent - pts[i].exponent;
                const auto e2 = pts[k].exponent - pts[i].exponent;
                const auto det = cross(e1, e2);
                if (det == 0) continue;
                // a = alpha + beta k + gamma l through the three lifted points.
                const Rational da1 = pts[j].height - pts[i].height;
                const Rational da2 = pts[k].height - pts[i].height;
                const Rational beta = (da1 * e2.y - da2 * e1.y) / det;
                const Rational gamma = (e1.x * da2 - e2.x * da1) / det;
                const Rational alpha = pts[i].height - beta * pts[i].exponent.x - gamma * pts[i].exponent.y;
                std::set<std::size_t> members;
                bool lower = true;
                for (std::size_t m = 0; m < n && lower; ++m) {
                    const Rational gap = pts[m].height - (alpha + beta * pts[m].exponent.x + gamma * pts[m].exponent.y);
                    if (gap < Rational(0)) lower = false;
                    if (gap == Rational(0)) members.insert(m);
                }
                if (!lower) continue;
                faces[{-beta, -gamma}].insert(members.begin(), members.end());
            }
    std::vector<LowerFace> out;
    for (auto& [vertex, members] : faces) out.push_back({vertex, std::move(members)});
    return out;
}

}  // namespace

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;
    std::vector<LatticePoint> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
        hull[k++] = p;
    }
    for (std::size_t i = points.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(hull[k - 1] - hull[k - 2], points[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

TropicalCurve corner_locus(const TropicalPolynomial& poly) {
    std::vector<Lifted> pts;
    for (std::size_t i = 0; i < poly.size(); ++i)
        pts.push_back({poly.monomials()[i].exponent, poly.monomials()[i].coefficient, i});
    if (pts.size() < 2) throw TropicalError(TropicalError::Kind::EmptyCurve, "one monomial dominates everywhere");
    std::size_t a = 0, b = 1;
    if (collinear(pts, a, b)) return locus_1d(pts);

    const auto faces = lower_faces(pts);
    // Each cell edge p -> q (counterclockwise around its cell) maps to the cells that contain it.
    std::map<std::pair<LatticePoint, LatticePoint>, std::vector<std::pair<RationalPoint, LatticePoint>>> dual;
    for (const auto& face : faces) {
        std::vector<LatticePoint> cell;
        for (auto m : face.members) cell.push_back(pts[m].exponent);
        const auto hull = convex_hull(cell);
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const auto p = hull[i];
            const auto q = hull[(i + 1) % hull.size()];
            const auto e = q - p;
            const LatticePoint inward{-e.y, e.x};
            dual[{std::min(p, q), std::max(p, q)}].emplace_back(face.vertex, inward);
        }
    }
    TropicalCurve curve;
    for (const auto& [edge, cells] : dual) {
        const auto weight = lattice_length(edge.second - edge.first);
        if (cells.size() == 2) {
            curve.add_segment(cells[0].first, cells[1].first, weight);
        } else if (cells.size() == 1) {
            curve.add_ray(cells[0].first, cells[0].second, weight);
        } else {
            throw TropicalError(TropicalError::Kind::InvalidCurve, "subdivision edge shared by more than two cells");
        }
    }
    curve.normalize();
    if (!check_balancing(curve).ok())
        throw TropicalError(TropicalError::Kind::Unbalanced, "corner locus failed the balancing check");
    return curve;
}

std::vector<std::size_t> active_monomials(const TropicalPolynomial& poly) {
    std::vector<Lifted> pts;
    for (std::size_t i = 0; i < poly.size(); ++i)
        pts.push_back({poly.monomials()[i].exponent, poly.monomials()[i].coefficient, i});
    if (pts.size() == 1) return {0};
    std::set<std::size_t> active;
    std::size_t a = 0, b = 1;
    if (collinear(pts, a, b)) {
        // A monomial is active iff some x makes it minimal; test at the tie points and far out.
        const auto curve = locus_1d(pts);
        for (const auto& e : curve.edges())
            for (auto exponent : poly.evaluate(e.anchor).argmin)
                for (std::size_t i = 0; i < poly.size(); ++i)
                    if (poly.monomials()[i].exponent == exponent) active.insert(i);
    } else {
        for (const auto& face : lower_faces(pts)) active.insert(face.members.begin(), face.members.end());
    }
    return {active.begin(), active.end()};
}

}  // namespace tropsand
