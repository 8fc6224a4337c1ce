#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "collatz/core.hpp"

namespace collatz {

/// Dense table of C-map heights for 1 <= n <= limit.
///
/// Built once by a single writer; afterwards it is read-only and may be
/// shared across threads. Queries above `limit` iterate until the orbit
/// drops into the table.
class HeightCache {
public:
    static HeightCache build(std::uint64_t limit, std::uint64_t step_cap = default_step_cap);

    std::uint64_t limit() const noexcept { return limit_; }

    bool contains(u128 n) const noexcept { return n >= 1 && n <= limit_; }

    // Unchecked for n in [1, limit].
    std::uint32_t at(std::uint64_t n) const noexcept { return heights_[n]; }

    std::uint32_t height(u128 n) const;

    std::span<const std::uint16_t> raw() const noexcept { return heights_; }

private:
    HeightCache(std::uint64_t limit, std::vector<std::uint16_t> heights, std::uint64_t step_cap)
        : limit_(limit), step_cap_(step_cap), heights_(std::move(heights)) {}

    std::uint64_t limit_;
    std::uint64_t step_cap_;
    std::vector<std::uint16_t> heights_;  // index 0 unused
};

}  // namespace collatz
