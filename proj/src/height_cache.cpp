#include "collatz/height_cache.hpp"

#include <limits>

namespace collatz {

namespace {

constexpr std::uint32_t max_cached_height = std::numeric_limits<std::uint16_t>::max();

}  // namespace

HeightCache HeightCache::build(std::uint64_t limit, std::uint64_t step_cap) {
    if (limit == 0) throw PreconditionError("height cache: limit must be positive");
    std::vector<std::uint16_t> h(limit + 1, 0);
    h[1] = 0;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if ((n & 1) == 0) {
            h[n] = static_cast<std::uint16_t>(h[n >> 1] + 1);
            continue;
        }
        // Every m < n is already filled; walk until the orbit dips below n.
        u128 v = n;
        std::uint64_t steps = 0;
        while (v >= n) {
            if (steps == step_cap) (void)trajectory(n, MapKind::C, step_cap);
            v = c_step(v);
            ++steps;
        }
        const std::uint64_t total = steps + h[static_cast<std::uint64_t>(v)];
        if (total > max_cached_height)
            throw Error("height of " + std::to_string(n) + " exceeds the 16-bit cache width");
        h[n] = static_cast<std::uint16_t>(total);
    }
    return HeightCache(limit, std::move(h), step_cap);
}

std::uint32_t HeightCache::height(u128 n) const {
    if (n == 0) throw PreconditionError("height: n must be positive");
    std::uint64_t steps = 0;
    u128 v = n;
    while (v > limit_) {
        if (steps == step_cap_) (void)trajectory(n, MapKind::C, step_cap_);
        v = c_step(v);
        ++steps;
    }
    return static_cast<std::uint32_t>(steps + heights_[static_cast<std::uint64_t>(v)]);
}

}  // namespace collatz
