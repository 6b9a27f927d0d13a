#include "tropsand/lattice.hpp"

#include <charconv>
#include <cmath>
#include <numeric>

namespace tropsand {

double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

Rational floor_rational(const Rational& r) { return Rational(floor_div(r.numerator(), r.denominator())); }

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
    std::int64_t value = 0;
    const auto* first = text.data();
    if (!text.empty() && text.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw LatticeError(LatticeError::Kind::InvalidConfig, "malformed rational literal '" + std::string(whole) + "'");
    return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto den = parse_int(text.substr(slash + 1), text);
        if (den == 0) throw LatticeError(LatticeError::Kind::InvalidConfig, "zero denominator in '" + std::string(text) + "'");
        return Rational(parse_int(text.substr(0, slash), text), den);
    }
    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
        auto frac = text.substr(dot_pos + 1);
        if (frac.size() > 15) throw LatticeError(LatticeError::Kind::InvalidConfig, "too many decimals in '" + std::string(text) + "'");
        std::string digits(text.substr(0, dot_pos));
        bool negative = !digits.empty() && digits.front() == '-';
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        std::int64_t scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        auto int_part = parse_int(digits, text);
        auto frac_part = frac.empty() ? 0 : parse_int(frac, text);
        auto num = std::abs(int_part) * scale + frac_part;
        return Rational(negative ? -num : num, scale);
    }
    return Rational(parse_int(text, text));
}

Coordinate::Coordinate(double d) : value_(d) {
    if (!std::isfinite(d)) throw LatticeError(LatticeError::Kind::InvalidConfig, "coordinate must be finite");
}

double Coordinate::to_double() const {
    if (auto r = std::get_if<Rational>(&value_)) return tropsand::to_double(*r);
    return std::get<double>(value_);
}

Rational Coordinate::to_rational() const {
    if (auto r = std::get_if<Rational>(&value_)) return *r;
    // Best approximation by continued fractions with bounded denominator.
    const double target = std::get<double>(value_);
    constexpr std::int64_t kMaxDen = std::int64_t{1} << 20;
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rest = target;
    for (int iter = 0; iter < 64; ++iter) {
        const double a_real = std::floor(rest);
        const auto a = static_cast<std::int64_t>(a_real);
        const std::int64_t h2 = a * h1 + h0;
        const std::int64_t k2 = a * k1 + k0;
        if (k2 > kMaxDen) break;
        h0 = h1; h1 = h2; k0 = k1; k1 = k2;
        const double frac = rest - a_real;
        if (std::abs(static_cast<double>(h1) / static_cast<double>(k1) - target) < 1e-15 || frac < 1e-12) break;
        rest = 1.0 / frac;
    }
    return Rational(h1, k1);
}

std::int64_t Coordinate::scaled_floor(std::int64_t scale) const {
    if (auto r = std::get_if<Rational>(&value_)) return floor_div(r->numerator() * scale, r->denominator());
    const double v = std::get<double>(value_) * static_cast<double>(scale);
    const double nearest = std::round(v);
    if (std::abs(v - nearest) <= std::ldexp(1.0, -40)) return static_cast<std::int64_t>(nearest);
    return static_cast<std::int64_t>(std::floor(v));
}

LatticePoint primitive_vector(LatticePoint v) {
    if (v.x == 0 && v.y == 0) throw LatticeError(LatticeError::Kind::ZeroVector, "primitive vector of (0,0)");
    const auto g = std::gcd(v.x, v.y);
    return {v.x / g, v.y / g};
}

std::int64_t lattice_length(LatticePoint v) { return std::gcd(v.x, v.y); }

LatticePoint round_down(const PlanePoint& p, std::int64_t scale) {
    return {p.x.scaled_floor(scale), p.y.scaled_floor(scale)};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    auto q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace tropsand
