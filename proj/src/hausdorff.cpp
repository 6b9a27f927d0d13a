#include "tropsand/hausdorff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_int.hpp>

#include "tropsand/region_fit.hpp"

namespace tropsand {

namespace {

using Big = boost::multiprecision::cpp_rational;

Big big(const Rational& r) { return Big(r.numerator()) / Big(r.denominator()); }

// points come from scaled lattice sites, so the exact difference fits in a Rational; only the square is
// done in long double.
double point_distance(const RationalPoint& p, const RationalPoint& q) {
    const auto dx = static_cast<long double>(to_double(p.x - q.x));
    const auto dy = static_cast<long double>(to_double(p.y - q.y));
    return static_cast<double>(std::sqrt(dx * dx + dy * dy));
}

void require_nonempty(bool empty) {
    if (empty) throw AnalysisError(AnalysisError::Kind::EmptySet, "hausdorff distance of an empty set");
}

}  // namespace

double point_segment_distance(const RationalPoint& p, const PlaneSegment& s) {
    const Big ax = big(s.a.x), ay = big(s.a.y);
    const Big dx = big(s.b.x) - ax, dy = big(s.b.y) - ay;
    const Big px = big(p.x) - ax, py = big(p.y) - ay;
    const Big len2 = dx * dx + dy * dy;
    Big t = 0;
    if (len2 != 0) {
        t = (px * dx + py * dy) / len2;
        if (t < 0) t = 0;
        if (t > 1) t = 1;
    }
    const Big ex = px - t * dx, ey = py - t * dy;
    const Big d2 = ex * ex + ey * ey;
    return std::sqrt(d2.convert_to<double>());
}

double directed_hausdorff(const std::vector<RationalPoint>& from, const std::vector<RationalPoint>& to) {
    require_nonempty(from.empty() || to.empty());
    double worst = 0.0;
    for (const auto& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : to) {
            best = std::min(best, point_distance(p, q));
            if (best <= worst) break;  // cannot raise the sup any more
        }
        worst = std::max(worst, best);
    }
    return worst;
}

double directed_hausdorff(const std::vector<RationalPoint>& from, const std::vector<PlaneSegment>& to) {
    require_nonempty(from.empty() || to.empty());
    double worst = 0.0;
    for (const auto& p : from) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& s : to) best = std::min(best, point_segment_distance(p, s));
        worst = std::max(worst, best);
    }
    return worst;
}

double directed_hausdorff(const std::vector<PlaneSegment>& from, const std::vector<RationalPoint>& to, double spacing) {
    require_nonempty(from.empty() || to.empty());
    if (!(spacing > 0.0)) throw std::invalid_argument("sampling spacing must be positive");
    std::vector<std::pair<double, double>> targets;
    targets.reserve(to.size());
    for (const auto& q : to) targets.emplace_back(to_double(q.x), to_double(q.y));
    double worst = 0.0;
    for (const auto& s : from) {
        const double ax = to_double(s.a.x), ay = to_double(s.a.y);
        const double bx = to_double(s.b.x), by = to_double(s.b.y);
        const double len = std::hypot(bx - ax, by - ay);
        const auto steps = static_cast<std::size_t>(std::ceil(len / spacing));
        for (std::size_t i = 0; i <= steps; ++i) {
            const double t = steps == 0 ? 0.0 : static_cast<double>(i) / static_cast<double>(steps);
            const double x = ax + t * (bx - ax), y = ay + t * (by - ay);
            double best = std::numeric_limits<double>::infinity();
            for (const auto& [qx, qy] : targets) {
                best = std::min(best, std::hypot(qx - x, qy - y));
                if (best <= worst) break;
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

double hausdorff_distance(const std::vector<RationalPoint>& a, const std::vector<RationalPoint>& b) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double hausdorff_distance(const std::vector<RationalPoint>& a, const std::vector<PlaneSegment>& b, double spacing) {
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a, spacing));
}

std::vector<PlaneSegment> curve_segments(const TropicalCurve& curve) {
    std::vector<PlaneSegment> out;
    for (const auto& e : curve.edges()) {
        if (e.kind != EdgeKind::Segment)
            throw TropicalError(TropicalError::Kind::UnboundedEdge, "curve has an unbounded edge");
        out.push_back({curve.vertices()[e.from], curve.vertices()[e.to]});
    }
    return out;
}

}  // namespace tropsand
