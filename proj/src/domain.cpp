#include "tropsand/domain.hpp"

#include <algorithm>
#include <limits>

namespace tropsand {

namespace {

__extension__ typedef __int128 Wide;

Wide floor_div_wide(Wide a, Wide b) {
    auto q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

ScaledDomain::ScaledDomain(LatticePolygon polygon, std::int64_t scale) : polygon_(std::move(polygon)), scale_(scale) {
    using Kind = LatticeError::Kind;
    if (scale < 1) throw LatticeError(Kind::InvalidConfig, "scale must be at least 1");
    const auto lo = polygon_.min_corner();
    const auto hi = polygon_.max_corner();
    const auto extent = std::max({std::abs(lo.x), std::abs(lo.y), std::abs(hi.x), std::abs(hi.y)});
    if (extent > 0 && extent > (kCoordinateLimit - 1) / scale)
        throw LatticeError(Kind::ScaleOverflow, "scale " + std::to_string(scale) + " pushes coordinates past 2^31");

    for (auto y = lo.y * scale; y <= hi.y * scale; ++y) {
        std::int64_t x_lo = std::numeric_limits<std::int64_t>::min();
        std::int64_t x_hi = std::numeric_limits<std::int64_t>::max();
        bool empty = false;
        for (const auto& s : polygon_.sides()) {
            // Inside: cross(l_s, p - N * from) >= 0, i.e. dx * (y - ay) - dy * (x - ax) >= 0.
            const Wide ax = s.from.x * scale, ay = s.from.y * scale;
            const Wide dx = s.primitive.x, dy = s.primitive.y;
            const Wide rhs = dx * (y - ay) + dy * ax;  // dy * x <= rhs
            if (dy == 0) {
                if (dx * (y - ay) < 0) empty = true;
            } else if (dy > 0) {
                x_hi = std::min(x_hi, static_cast<std::int64_t>(floor_div_wide(rhs, dy)));
            } else {
                x_lo = std::max(x_lo, static_cast<std::int64_t>(-floor_div_wide(-rhs, dy)));
            }
        }
        if (empty || x_lo > x_hi) {
            // thin polygons can have lattice-free rows between occupied ones; keep them as empty
            // intervals so rows stay indexed by y
            if (!rows_.empty()) rows_.push_back({y, rows_.back().x_min, rows_.back().x_min - 1});
            continue;
        }
        rows_.push_back({y, x_lo, x_hi});
    }
    while (!rows_.empty() && rows_.back().width() == 0) rows_.pop_back();
    offsets_.reserve(rows_.size());
    for (const auto& row : rows_) {
        offsets_.push_back(size_);
        size_ += static_cast<std::size_t>(row.width());
    }
}

ScaledDomain build_domain(const LatticePolygon& polygon, std::int64_t scale) { return ScaledDomain(polygon, scale); }

LatticePoint ScaledDomain::site(std::size_t index) const {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    const auto r = static_cast<std::size_t>(std::distance(offsets_.begin(), it) - 1);
    return {rows_[r].x_min + static_cast<std::int64_t>(index - offsets_[r]), rows_[r].y};
}

std::vector<LatticePoint> ScaledDomain::sites() const {
    std::vector<LatticePoint> out;
    out.reserve(size_);
    for_each_site([&](std::size_t, LatticePoint v) { out.push_back(v); });
    return out;
}

Neighborhood ScaledDomain::neighbors(LatticePoint v) const {
    if (!contains(v))
        throw LatticeError(LatticeError::Kind::NotASite,
                           "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ") is not a site");
    Neighborhood out;
    for (auto step : kLatticeSteps) {
        const auto w = v + step;
        if (contains(w))
            out.sites[static_cast<std::size_t>(out.count++)] = w;
        else
            ++out.missing;
    }
    return out;
}

bool ScaledDomain::on_polygon_boundary(LatticePoint v) const {
    for (const auto& s : polygon_.sides()) {
        const auto from = s.from * scale_;
        if (cross(s.to * scale_ - from, v - from) == 0) return contains(v);
    }
    return false;
}

}  // namespace tropsand
