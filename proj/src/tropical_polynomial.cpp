#include "tropsand/tropical_polynomial.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace tropsand {

TropicalPolynomial::TropicalPolynomial(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
    if (monomials_.empty()) throw TropicalError(TropicalError::Kind::InvalidPolynomial, "empty support");
    std::set<LatticePoint> seen;
    for (const auto& m : monomials_) {
        if (!seen.insert(m.exponent).second)
            throw TropicalError(TropicalError::Kind::InvalidPolynomial,
                                "repeated exponent (" + std::to_string(m.exponent.x) + "," + std::to_string(m.exponent.y) + ")");
    }
}

Rational TropicalPolynomial::value_at(const RationalPoint& x) const {
    Rational best = monomials_.front().value_at(x);
    for (const auto& m : monomials_) best = std::min(best, m.value_at(x));
    return best;
}

double TropicalPolynomial::value_at(double x1, double x2) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : monomials_)
        best = std::min(best, static_cast<double>(m.exponent.x) * x1 + static_cast<double>(m.exponent.y) * x2 +
                                  to_double(m.coefficient));
    return best;
}

Evaluation TropicalPolynomial::evaluate(const RationalPoint& x) const {
    Evaluation out{value_at(x), {}};
    for (const auto& m : monomials_)
        if (m.value_at(x) == out.value) out.argmin.push_back(m.exponent);
    return out;
}

TropicalPolynomial TropicalPolynomial::with_coefficient(std::size_t i, Rational coefficient) const {
    auto copy = monomials_;
    copy.at(i).coefficient = coefficient;
    return TropicalPolynomial(std::move(copy));
}

TropicalPolynomial TropicalPolynomial::shifted(const Rational& constant) const {
    auto copy = monomials_;
    for (auto& m : copy) m.coefficient += constant;
    return TropicalPolynomial(std::move(copy));
}

bool TropicalPolynomial::same_as(const TropicalPolynomial& other) const {
    if (size() != other.size()) return false;
    auto key = [](const Monomial& m) { return m.exponent; };
    auto a = monomials_, b = other.monomials_;
    std::sort(a.begin(), a.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
    std::sort(b.begin(), b.end(), [&](auto& l, auto& r) { return key(l) < key(r); });
    return a == b;
}

Evaluation evaluate(const TropicalPolynomial& poly, const PlanePoint& x) { return poly.evaluate(x.to_rational()); }

}  // namespace tropsand
