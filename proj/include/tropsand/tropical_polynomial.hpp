#pragma once

#include <stdexcept>
#include <vector>

#include "tropsand/lattice.hpp"

namespace tropsand {

class TropicalError : public std::runtime_error {
public:
    enum class Kind {
        InvalidPolynomial,
        EmptyCurve,
        UnboundedEdge,
        NoSolution,
        Inconsistent,
        BoundaryViolation,
        Unbalanced,
        InvalidCurve,
    };

    TropicalError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// The affine form k x1 + l x2 + a.
struct Monomial {
    LatticePoint exponent;
    Rational coefficient{0};

    Rational value_at(const RationalPoint& x) const { return coefficient + dot(x, exponent); }
    bool operator==(const Monomial&) const = default;
};

struct Evaluation {
    Rational value{0};
    std::vector<LatticePoint> argmin;  ///< exponents attaining the minimum, in support order
};

/// F(x) = min over the support of (k x1 + l x2 + a_{k,l}).
class TropicalPolynomial {
public:
    /// Throws InvalidPolynomial on an empty support or repeated exponents.
    explicit TropicalPolynomial(std::vector<Monomial> monomials);

    const std::vector<Monomial>& monomials() const { return monomials_; }
    std::size_t size() const { return monomials_.size(); }

    Rational value_at(const RationalPoint& x) const;
    double value_at(double x1, double x2) const;
    Evaluation evaluate(const RationalPoint& x) const;

    TropicalPolynomial with_coefficient(std::size_t i, Rational coefficient) const;
    /// Adds the same constant to every coefficient.
    TropicalPolynomial shifted(const Rational& constant) const;

    /// Same support and coefficients, ignoring order.
    bool same_as(const TropicalPolynomial& other) const;

private:
    std::vector<Monomial> monomials_;
};

Evaluation evaluate(const TropicalPolynomial& poly, const PlanePoint& x);

}  // namespace tropsand
