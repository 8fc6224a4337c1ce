#include "collatz/core.hpp"

namespace collatz {

std::string_view to_string(MapKind map) noexcept { return map == MapKind::C ? "C" : "T"; }

MapKind parse_map_kind(std::string_view s) {
    if (s == "c" || s == "C") return MapKind::C;
    if (s == "t" || s == "T") return MapKind::T;
    throw PreconditionError("unknown map '" + std::string(s) + "' (expected c or t)");
}

Trajectory::Trajectory(u128 start, MapKind map, std::vector<u128> values)
    : start_(start), map_(map), values_(std::move(values)) {
    if (values_.empty() || values_.front() != start_)
        throw PreconditionError("trajectory must begin with its start value");
}

Trajectory trajectory(u128 n, MapKind map, std::uint64_t step_cap) {
    if (n == 0) throw PreconditionError("trajectory: n must be positive");
    std::vector<u128> values{n};
    u128 v = n;
    while (v != 1) {
        if (values.size() > step_cap) throw NonConvergenceError(n, std::move(values));
        v = step(v, map);
        values.push_back(v);
    }
    return Trajectory(n, map, std::move(values));
}

std::uint32_t height(u128 n, std::uint64_t step_cap) {
    if (n == 0) throw PreconditionError("height: n must be positive");
    std::uint64_t k = 0;
    for (u128 v = n; v != 1; v = c_step(v)) {
        if (k == step_cap) {
            // Re-run to hand the caller the partial orbit.
            (void)trajectory(n, MapKind::C, step_cap);
        }
        ++k;
    }
    return static_cast<std::uint32_t>(k);
}

}  // namespace collatz
