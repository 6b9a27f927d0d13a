#pragma once

#include <cstdint>
#include <functional>

#include "tropsand/sand_state.hpp"

namespace tropsand {

struct RelaxationResult {
    SandState final;
    Odometer odometer;
    std::int64_t topplings_total = 0;
    std::int64_t grains_lost = 0;
};

struct RelaxOptions {
    /// Abort with NonTermination once this many topplings have happened.
    std::int64_t ceiling = 1'000'000'000'000;
    /// When positive, called with the current heights roughly every this many topplings.
    std::int64_t snapshot_every = 0;
    std::function<void(const SandState&, std::int64_t topplings)> on_snapshot;
};

/// Reference relaxer: row-major scans, one toppling per unstable site per visit, until a clean scan.
RelaxationResult relax_naive(const SandState& state, const RelaxOptions& options = {});

/// FIFO worklist relaxer with bulk topplings. Produces the same final state and odometer as relax_naive.
RelaxationResult relax_queue(const SandState& state, const RelaxOptions& options = {});

}  // namespace tropsand
