#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace collatz {

using u128 = unsigned __int128;

inline constexpr u128 u128_max = ~static_cast<u128>(0);

inline std::string to_string(u128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

// Strict decimal parse; rejects signs, blanks, and anything past 2^128-1.
inline std::optional<u128> parse_u128(std::string_view s) {
    if (s.empty()) return std::nullopt;
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return std::nullopt;
        const unsigned digit = static_cast<unsigned>(c - '0');
        if (v > (u128_max - digit) / 10) return std::nullopt;
        v = v * 10 + digit;
    }
    return v;
}

inline bool fits_u64(u128 v) { return v <= std::numeric_limits<std::uint64_t>::max(); }

}  // namespace collatz
