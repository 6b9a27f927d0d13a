#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropsand/relax.hpp"

namespace tropsand {

/// -4 f(v) + sum of f over the four lattice neighbors, with f = 0 off the domain.
std::int64_t discrete_laplacian(const Odometer& f, LatticePoint v);

/// The whole field initial + Laplacian(odometer).
SandState apply_laplacian(const SandState& initial, const Odometer& odometer);

struct LeastActionReport {
    bool identity_holds = true;   ///< final == initial + Laplacian(F)
    bool final_stable = true;
    bool decrement_probe = true;  ///< F - delta_v leaves the admissible set for every v with F(v) > 0
    std::vector<LatticePoint> identity_failures;
    std::vector<LatticePoint> probe_failures;

    bool ok() const { return identity_holds && final_stable && decrement_probe; }
};

LeastActionReport verify_least_action(const SandState& initial, const RelaxationResult& result);

}  // namespace tropsand
