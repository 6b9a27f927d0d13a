#include "tropsand/relax.hpp"

#include <deque>
#include <limits>
#include <unordered_map>

namespace tropsand {

namespace {

constexpr std::uint32_t kNoNeighbor = std::numeric_limits<std::uint32_t>::max();

/// Neighbor indices of every site in the order of kLatticeSteps; kNoNeighbor marks a missing neighbor.
std::vector<std::array<std::uint32_t, 4>> neighbor_table(const ScaledDomain& domain) {
    if (domain.size() >= kNoNeighbor)
        throw SandpileError(SandpileError::Kind::DomainMismatch, "domain too large for 32-bit site indices");
    std::vector<std::array<std::uint32_t, 4>> table(domain.size());
    domain.for_each_site([&](std::size_t i, LatticePoint v) {
        for (std::size_t d = 0; d < kLatticeSteps.size(); ++d) {
            auto j = domain.find(v + kLatticeSteps[d]);
            table[i][d] = j ? static_cast<std::uint32_t>(*j) : kNoNeighbor;
        }
    });
    return table;
}

void check_input(const SandState& state) {
    if (!state.is_nonnegative())
        throw SandpileError(SandpileError::Kind::NegativeHeight, "states must be non-negative");
}

[[noreturn]] void non_termination(std::int64_t ceiling) {
    throw SandpileError(SandpileError::Kind::NonTermination,
                        "relaxation exceeded the toppling ceiling of " + std::to_string(ceiling));
}

/// Heights as bytes; values above kSpillAbove live in a side table.
class CompactHeights {
public:
    explicit CompactHeights(const SandState& state) : small_(state.size()) {
        for (std::size_t i = 0; i < state.size(); ++i) set(i, state[i]);
    }

    std::int64_t get(std::size_t i) const { return small_[i] == kSpilled ? spill_.at(i) : small_[i]; }

    void set(std::size_t i, std::int64_t h) {
        if (h <= kSpillAbove) {
            if (small_[i] == kSpilled) spill_.erase(i);
            small_[i] = static_cast<std::uint8_t>(h);
        } else {
            small_[i] = kSpilled;
            spill_[i] = h;
        }
    }

    /// Adds k and returns the new height.
    std::int64_t add(std::size_t i, std::int64_t k) {
        if (small_[i] != kSpilled && small_[i] + k <= kSpillAbove) {
            small_[i] = static_cast<std::uint8_t>(small_[i] + k);
            return small_[i];
        }
        const auto h = get(i) + k;
        set(i, h);
        return h;
    }

    std::size_t spilled() const { return spill_.size(); }

private:
    static constexpr std::uint8_t kSpilled = 255;
    static constexpr std::int64_t kSpillAbove = 250;

    std::vector<std::uint8_t> small_;
    std::unordered_map<std::size_t, std::int64_t> spill_;
};

}  // namespace

RelaxationResult relax_naive(const SandState& state, const RelaxOptions& options) {
    check_input(state);
    const auto table = neighbor_table(state.domain());
    RelaxationResult result{state, Odometer(state.domain_ptr()), 0, 0};
    auto& h = result.final;
    auto& odo = result.odometer;
    std::int64_t next_snapshot = options.snapshot_every;
    bool toppled = true;
    while (toppled) {
        toppled = false;
        for (std::size_t i = 0; i < h.size(); ++i) {
            if (h[i] < 4) continue;
            toppled = true;
            h[i] -= 4;
            odo[i] += 1;
            for (auto j : table[i]) {
                if (j == kNoNeighbor)
                    ++result.grains_lost;
                else
                    h[j] += 1;
            }
            if (++result.topplings_total > options.ceiling) non_termination(options.ceiling);
            if (options.snapshot_every > 0 && result.topplings_total >= next_snapshot && options.on_snapshot) {
                options.on_snapshot(h, result.topplings_total);
                next_snapshot += options.snapshot_every;
            }
        }
    }
    return result;
}

RelaxationResult relax_queue(const SandState& state, const RelaxOptions& options) {
    check_input(state);
    const auto table = neighbor_table(state.domain());
    CompactHeights heights(state);
    Odometer odo(state.domain_ptr());
    std::int64_t total = 0;
    std::int64_t lost = 0;
    std::int64_t next_snapshot = options.snapshot_every;

    std::deque<std::uint32_t> queue;
    for (std::size_t i = 0; i < state.size(); ++i)
        if (state[i] >= 4) queue.push_back(static_cast<std::uint32_t>(i));

    auto materialize = [&] {
        SandState out(state.domain_ptr());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = heights.get(i);
        return out;
    };

    while (!queue.empty()) {
        const auto i = queue.front();
        queue.pop_front();
        const auto h = heights.get(i);
        const auto k = h / 4;
        heights.set(i, h - 4 * k);
        odo[i] += k;
        total += k;
        for (auto j : table[i]) {
            if (j == kNoNeighbor) {
                lost += k;
                continue;
            }
            const auto after = heights.add(j, k);
            if (after >= 4 && after - k < 4) queue.push_back(j);
        }
        if (total > options.ceiling) non_termination(options.ceiling);
        if (options.snapshot_every > 0 && total >= next_snapshot && options.on_snapshot) {
            options.on_snapshot(materialize(), total);
            next_snapshot += options.snapshot_every;
        }
    }
    return {materialize(), std::move(odo), total, lost};
}

}  // namespace tropsand
