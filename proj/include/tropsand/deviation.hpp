#pragma once

#include <vector>

#include "tropsand/relax.hpp"

namespace tropsand {

struct DeviationSite {
    LatticePoint site;
    int deficit = 0;  ///< 3 - height, in 1..3
};

/// Sites of a stable state holding fewer than 3 grains.
struct DeviationLocus {
    std::int64_t scale = 1;
    std::vector<DeviationSite> sites;

    /// Sites divided by the scale.
    std::vector<RationalPoint> scaled_points() const;
    /// Number of sites per deficit value (index 0 unused).
    std::array<std::size_t, 4> deficit_histogram() const;
};

DeviationLocus deviation_set(const RelaxationResult& result);
DeviationLocus deviation_set(const SandState& stable_state);

}  // namespace tropsand
