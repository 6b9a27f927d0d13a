#include "tropsand/sand_state.hpp"

#include <algorithm>

namespace tropsand {

bool SandState::is_stable() const {
    return std::all_of(values().begin(), values().end(), [](auto h) { return h <= 3; });
}

bool SandState::is_nonnegative() const {
    return std::all_of(values().begin(), values().end(), [](auto h) { return h >= 0; });
}

SandState max_stable(DomainPtr domain) { return SandState(std::move(domain), 3); }

SandState perturb(const SandState& state, const PerturbationConfig& config) {
    SandState out = state;
    for (auto v : config.rounded_sites(state.domain())) out.at_site(v) += 1;
    return out;
}

ToppleOutcome topple(const SandState& state, LatticePoint v, bool enforce_legal) {
    const auto& domain = state.domain();
    const auto nb = domain.neighbors(v);
    ToppleOutcome out{state, nb.missing};
    auto& h = out.state.at_site(v);
    if (enforce_legal && h < 4)
        throw SandpileError(SandpileError::Kind::IllegalToppling, "toppling at a site holding " + std::to_string(h) + " grains");
    h -= 4;
    for (auto w : nb.span()) out.state.at_site(w) += 1;
    return out;
}

}  // namespace tropsand
