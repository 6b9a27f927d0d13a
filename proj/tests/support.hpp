#pragma once
// Independent helpers for the tests: brute-force geometry and random instances.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "tropsand/domain.hpp"
#include "tropsand/sand_state.hpp"

namespace testsupport {

using tropsand::LatticePoint;

// closed polygon membership by cross products, any orientation
inline bool inside_closed(const std::vector<LatticePoint>& poly, std::int64_t x, std::int64_t y, std::int64_t n) {
    int pos = 0, neg = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const auto a = poly[i], b = poly[(i + 1) % poly.size()];
        const std::int64_t c = (b.x - a.x) * n * (y - a.y * n) - (b.y - a.y) * n * (x - a.x * n);
        if (c > 0) ++pos;
        if (c < 0) ++neg;
    }
    return pos == 0 || neg == 0;
}

inline std::size_t brute_force_sites(const std::vector<LatticePoint>& poly, std::int64_t n) {
    std::int64_t x0 = poly[0].x, x1 = x0, y0 = poly[0].y, y1 = y0;
    for (auto p : poly) x0 = std::min(x0, p.x), x1 = std::max(x1, p.x), y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
    std::size_t count = 0;
    for (std::int64_t y = y0 * n; y <= y1 * n; ++y)
        for (std::int64_t x = x0 * n; x <= x1 * n; ++x) count += inside_closed(poly, x, y, n);
    return count;
}

// strict convex hull (monotone chain) of random points; retries until the area is positive
inline std::vector<LatticePoint> random_convex_polygon(std::mt19937_64& rng, std::int64_t extent) {
    std::uniform_int_distribution<std::int64_t> coord(0, extent);
    std::uniform_int_distribution<int> count(3, 9);
    for (;;) {
        std::vector<LatticePoint> pts(static_cast<std::size_t>(count(rng)));
        for (auto& p : pts) p = {coord(rng), coord(rng)};
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (pts.size() < 3) continue;
        std::vector<LatticePoint> hull(2 * pts.size());
        std::size_t k = 0;
        auto turn = [](LatticePoint o, LatticePoint a, LatticePoint b) {
            return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
        };
        for (auto p : pts) {
            while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0) --k;
            hull[k++] = p;
        }
        for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
            while (k >= t && turn(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
            hull[k++] = pts[i];
        }
        hull.resize(k - 1);
        if (hull.size() >= 3) return hull;
    }
}

inline tropsand::SandState random_state(std::mt19937_64& rng, tropsand::DomainPtr domain, int max_height) {
    std::uniform_int_distribution<int> h(0, max_height);
    tropsand::SandState s(domain);
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = h(rng);
    return s;
}

}  // namespace testsupport
