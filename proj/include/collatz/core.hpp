#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "collatz/error.hpp"
#include "collatz/u128.hpp"

namespace collatz {

// C: n -> n/2 | 3n+1.  T: n -> n/2 | (3n+1)/2.
enum class MapKind : std::uint8_t { C, T };

std::string_view to_string(MapKind map) noexcept;
MapKind parse_map_kind(std::string_view s);  // accepts c/C/t/T

inline constexpr std::uint64_t default_step_cap = 100'000;

// Largest odd n whose 3n+1 still fits.
inline constexpr u128 max_odd_step_input = (u128_max - 1) / 3;

inline u128 c_step(u128 n) {
    if ((n & 1) == 0) return n >> 1;
    if (n > max_odd_step_input) throw OverflowError(n);
    return 3 * n + 1;
}

inline u128 t_step(u128 n) {
    if ((n & 1) == 0) return n >> 1;
    if (n > max_odd_step_input) throw OverflowError(n);
    return (3 * n + 1) >> 1;
}

inline u128 step(u128 n, MapKind map) { return map == MapKind::C ? c_step(n) : t_step(n); }

// Orbit of `start` under one map, truncated at the first 1.
class Trajectory {
public:
    Trajectory(u128 start, MapKind map, std::vector<u128> values);

    u128 start() const noexcept { return start_; }
    MapKind map() const noexcept { return map_; }
    const std::vector<u128>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    std::size_t steps() const noexcept { return values_.size() - 1; }
    u128 operator[](std::size_t i) const { return values_[i]; }

    friend bool operator==(const Trajectory&, const Trajectory&) = default;

private:
    u128 start_;
    MapKind map_;
    std::vector<u128> values_;
};

// Throws PreconditionError for n == 0, NonConvergenceError past step_cap,
// OverflowError if an iterate leaves 128 bits.
Trajectory trajectory(u128 n, MapKind map, std::uint64_t step_cap = default_step_cap);

// Smallest k with C^k(n) = 1.
std::uint32_t height(u128 n, std::uint64_t step_cap = default_step_cap);

}  // namespace collatz
