#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "tropsand/polygon.hpp"

namespace tropsand {

/// Column interval [x_min, x_max] of one row of sites.
struct RowInterval {
    std::int64_t y = 0;
    std::int64_t x_min = 0;
    std::int64_t x_max = 0;

    std::int64_t width() const { return x_max - x_min + 1; }
    bool operator==(const RowInterval&) const = default;
};

/// In-domain neighbors of a site plus the number of lattice neighbors that are missing.
struct Neighborhood {
    std::array<LatticePoint, 4> sites{};
    int count = 0;
    int missing = 0;

    std::span<const LatticePoint> span() const { return {sites.data(), static_cast<std::size_t>(count)}; }
};

/// The site set Gamma_N = N * Omega intersected with Z^2, stored as one column interval per row.
class ScaledDomain {
public:
    ScaledDomain(LatticePolygon polygon, std::int64_t scale);

    const LatticePolygon& polygon() const { return polygon_; }
    std::int64_t scale() const { return scale_; }
    std::size_t size() const { return size_; }
    const std::vector<RowInterval>& rows() const { return rows_; }
    std::int64_t y_min() const { return rows_.front().y; }
    std::int64_t y_max() const { return rows_.back().y; }

    bool contains(LatticePoint v) const {
        if (v.y < y_min() || v.y > y_max()) return false;
        const auto& row = rows_[static_cast<std::size_t>(v.y - y_min())];
        return v.x >= row.x_min && v.x <= row.x_max;
    }

    /// Dense index of a site in row-major layout. Requires contains(v).
    std::size_t index(LatticePoint v) const {
        const auto r = static_cast<std::size_t>(v.y - y_min());
        return offsets_[r] + static_cast<std::size_t>(v.x - rows_[r].x_min);
    }

    std::optional<std::size_t> find(LatticePoint v) const {
        if (!contains(v)) return std::nullopt;
        return index(v);
    }

    LatticePoint site(std::size_t index) const;

    /// Sites of the domain in row-major order.
    std::vector<LatticePoint> sites() const;

    template <typename Fn>
    void for_each_site(Fn&& fn) const {
        std::size_t i = 0;
        for (const auto& row : rows_)
            for (auto x = row.x_min; x <= row.x_max; ++x) fn(i++, LatticePoint{x, row.y});
    }

    Neighborhood neighbors(LatticePoint v) const;

    /// A site on the boundary of N * Omega (some lattice neighbor may still be a site).
    bool on_polygon_boundary(LatticePoint v) const;

private:
    LatticePolygon polygon_;
    std::int64_t scale_;
    std::vector<RowInterval> rows_;
    std::vector<std::size_t> offsets_;
    std::size_t size_ = 0;
};

ScaledDomain build_domain(const LatticePolygon& polygon, std::int64_t scale);

inline Neighborhood neighbors(LatticePoint v, const ScaledDomain& domain) { return domain.neighbors(v); }

inline constexpr std::array<LatticePoint, 4> kLatticeSteps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};

}  // namespace tropsand
