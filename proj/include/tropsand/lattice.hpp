#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <boost/rational.hpp>

// boost's mixed rational==int template recurses under C++20 rewritten
// comparisons; exact non-template overloads win overload resolution.
namespace boost {
#define TROPSAND_RATIONAL_EQ(T)                                                                 \
    inline bool operator==(const rational<std::int64_t>& a, T b) {                              \
        return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b);           \
    }                                                                                           \
    inline bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
TROPSAND_RATIONAL_EQ(int)
TROPSAND_RATIONAL_EQ(long)
TROPSAND_RATIONAL_EQ(long long)
#undef TROPSAND_RATIONAL_EQ
}  // namespace boost

namespace tropsand {

/// Exact rational used for all curve and polynomial geometry.
using Rational = boost::rational<std::int64_t>;

/// Largest absolute lattice coordinate allowed after scaling.
inline constexpr std::int64_t kCoordinateLimit = std::int64_t{1} << 31;

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    constexpr bool operator==(const LatticePoint&) const = default;
    constexpr auto operator<=>(const LatticePoint&) const = default;

    constexpr LatticePoint operator+(LatticePoint o) const { return {x + o.x, y + o.y}; }
    constexpr LatticePoint operator-(LatticePoint o) const { return {x - o.x, y - o.y}; }
    constexpr LatticePoint operator-() const { return {-x, -y}; }
    constexpr LatticePoint operator*(std::int64_t s) const { return {x * s, y * s}; }
};

constexpr std::int64_t cross(LatticePoint a, LatticePoint b) { return a.x * b.y - a.y * b.x; }
constexpr std::int64_t dot(LatticePoint a, LatticePoint b) { return a.x * b.x + a.y * b.y; }

/// A point of the plane with exact rational coordinates.
struct RationalPoint {
    Rational x{0};
    Rational y{0};

    bool operator==(const RationalPoint&) const = default;
    bool operator<(const RationalPoint& o) const { return x < o.x || (x == o.x && y < o.y); }

    RationalPoint operator+(const RationalPoint& o) const { return {x + o.x, y + o.y}; }
    RationalPoint operator-(const RationalPoint& o) const { return {x - o.x, y - o.y}; }
    RationalPoint operator*(const Rational& s) const { return {x * s, y * s}; }

    static RationalPoint from(LatticePoint p) { return {Rational(p.x), Rational(p.y)}; }
};

inline Rational cross(const RationalPoint& a, const RationalPoint& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const RationalPoint& a, const RationalPoint& b) { return a.x * b.x + a.y * b.y; }
inline Rational dot(const RationalPoint& a, LatticePoint b) { return a.x * b.x + a.y * b.y; }

double to_double(const Rational& r);
Rational floor_rational(const Rational& r);
std::string to_string(const Rational& r);

/// Parses "3", "-1/3" or "0.25" style literals. Decimal literals are read exactly.
Rational parse_rational(std::string_view text);

/// One coordinate of a user supplied point: exact when given as a fraction, binary64 otherwise.
class Coordinate {
public:
    Coordinate() = default;
    Coordinate(Rational r) : value_(r) {}
    Coordinate(double d);

    bool is_exact() const { return std::holds_alternative<Rational>(value_); }
    double to_double() const;
    /// Exact value, or the closest rational with denominator at most 2^20 for binary64 input.
    Rational to_rational() const;
    /// floor(scale * value). Binary64 values within 2^-40 of an integer snap to it.
    std::int64_t scaled_floor(std::int64_t scale) const;

    bool operator==(const Coordinate&) const = default;

private:
    std::variant<Rational, double> value_{Rational(0)};
};

struct PlanePoint {
    Coordinate x;
    Coordinate y;

    RationalPoint to_rational() const { return {x.to_rational(), y.to_rational()}; }
    bool operator==(const PlanePoint&) const = default;
};

class LatticeError : public std::runtime_error {
public:
    enum class Kind { ZeroVector, ScaleOverflow, NotASite, NonConvex, DegenerateArea, CollinearVertexChain, TooFewVertices, PointOutsideDomain, InvalidConfig };

    LatticeError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// The primitive vector parallel to v with the same orientation.
LatticePoint primitive_vector(LatticePoint v);

/// Lattice length of a segment: gcd of the coordinate differences.
std::int64_t lattice_length(LatticePoint v);

/// Coordinate-wise rounding down of scale * p.
LatticePoint round_down(const PlanePoint& p, std::int64_t scale);

std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace tropsand
