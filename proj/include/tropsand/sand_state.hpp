#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "tropsand/config.hpp"
#include "tropsand/domain.hpp"

namespace tropsand {

using DomainPtr = std::shared_ptr<const ScaledDomain>;

inline DomainPtr make_domain(const LatticePolygon& polygon, std::int64_t scale) {
    return std::make_shared<const ScaledDomain>(polygon, scale);
}

class SandpileError : public std::runtime_error {
public:
    enum class Kind { IllegalToppling, NegativeHeight, NonTermination, DomainMismatch, UnstableState };

    SandpileError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline bool operator==(const ScaledDomain& a, const ScaledDomain& b) {
    return a.scale() == b.scale() && a.polygon() == b.polygon();
}

/// Per-site integer field over a scaled domain, stored densely in row-major site order.
template <typename Tag>
class SiteField {
public:
    using value_type = std::int64_t;

    explicit SiteField(DomainPtr domain, value_type fill = 0)
        : domain_(std::move(domain)), values_(domain_->size(), fill) {}
    SiteField(DomainPtr domain, std::vector<value_type> values) : domain_(std::move(domain)), values_(std::move(values)) {
        if (values_.size() != domain_->size())
            throw SandpileError(SandpileError::Kind::DomainMismatch, "field size does not match the domain");
    }

    const ScaledDomain& domain() const { return *domain_; }
    const DomainPtr& domain_ptr() const { return domain_; }

    value_type operator[](std::size_t i) const { return values_[i]; }
    value_type& operator[](std::size_t i) { return values_[i]; }

    value_type at(LatticePoint v) const {
        auto i = domain_->find(v);
        return i ? values_[*i] : 0;
    }
    value_type& at_site(LatticePoint v) {
        auto i = domain_->find(v);
        if (!i) throw LatticeError(LatticeError::Kind::NotASite, "not a site");
        return values_[*i];
    }

    std::span<const value_type> values() const { return values_; }
    std::span<value_type> values() { return values_; }
    std::size_t size() const { return values_.size(); }

    value_type total() const {
        value_type acc = 0;
        for (auto v : values_) acc += v;
        return acc;
    }

    bool operator==(const SiteField& o) const { return *domain_ == *o.domain_ && values_ == o.values_; }

private:
    DomainPtr domain_;
    std::vector<value_type> values_;
};

struct HeightTag {};
struct OdometerTag {};

/// Sandpile state: grain counts per site.
class SandState : public SiteField<HeightTag> {
public:
    using SiteField::SiteField;

    bool is_stable() const;
    bool is_nonnegative() const;
};

/// Toppling counts per site; implicitly zero off the domain.
using Odometer = SiteField<OdometerTag>;

/// The maximal stable state: 3 grains on every site.
SandState max_stable(DomainPtr domain);

/// state + sum of deltas at the rounded perturbation points.
SandState perturb(const SandState& state, const PerturbationConfig& config);

struct ToppleOutcome {
    SandState state;
    int grains_lost = 0;
};

/// One toppling at v: v loses 4, each in-domain neighbor gains 1.
ToppleOutcome topple(const SandState& state, LatticePoint v, bool enforce_legal = true);

}  // namespace tropsand
