#include "tropsand/deviation.hpp"

namespace tropsand {

std::vector<RationalPoint> DeviationLocus::scaled_points() const {
    std::vector<RationalPoint> out;
    out.reserve(sites.size());
    for (const auto& s : sites) out.push_back({Rational(s.site.x, scale), Rational(s.site.y, scale)});
    return out;
}

std::array<std::size_t, 4> DeviationLocus::deficit_histogram() const {
    std::array<std::size_t, 4> hist{};
    for (const auto& s : sites) ++hist[static_cast<std::size_t>(s.deficit)];
    return hist;
}

DeviationLocus deviation_set(const SandState& state) {
    if (!state.is_stable() || !state.is_nonnegative())
        throw SandpileError(SandpileError::Kind::UnstableState, "deviation set needs a stable state");
    DeviationLocus locus;
    locus.scale = state.domain().scale();
    state.domain().for_each_site([&](std::size_t i, LatticePoint v) {
        if (state[i] < 3) locus.sites.push_back({v, static_cast<int>(3 - state[i])});
    });
    return locus;
}

DeviationLocus deviation_set(const RelaxationResult& result) { return deviation_set(result.final); }

}  // namespace tropsand
