#include "tropsand/least_action.hpp"

namespace tropsand {

std::int64_t discrete_laplacian(const Odometer& f, LatticePoint v) {
    const auto& domain = f.domain();
    if (!domain.contains(v))
        throw LatticeError(LatticeError::Kind::NotASite,
                           "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ") is not a site");
    std::int64_t acc = -4 * f.at(v);
    for (auto step : kLatticeSteps) acc += f.at(v + step);
    return acc;
}

SandState apply_laplacian(const SandState& initial, const Odometer& odometer) {
    SandState out = initial;
    initial.domain().for_each_site([&](std::size_t i, LatticePoint v) { out[i] += discrete_laplacian(odometer, v); });
    return out;
}

LeastActionReport verify_least_action(const SandState& initial, const RelaxationResult& result) {
    LeastActionReport report;
    const auto predicted = apply_laplacian(initial, result.odometer);
    const auto& domain = initial.domain();
    domain.for_each_site([&](std::size_t i, LatticePoint v) {
        if (predicted[i] != result.final[i]) {
            report.identity_holds = false;
            report.identity_failures.push_back(v);
        }
    });
    report.final_stable = result.final.is_stable() && result.final.is_nonnegative();

    // F - delta_v changes initial + Laplacian(F) by +4 at v and -1 at each in-domain neighbor.
    // It stays admissible only if every resulting height is <= 3.
    domain.for_each_site([&](std::size_t i, LatticePoint v) {
        if (result.odometer[i] <= 0) return;
        bool violated = predicted[i] + 4 > 3;
        for (auto w : domain.neighbors(v).span()) violated = violated || predicted[domain.index(w)] - 1 > 3;
        if (!violated) {
            report.decrement_probe = false;
            report.probe_failures.push_back(v);
        }
    });
    return report;
}

}  // namespace tropsand
