#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "collatz/core.hpp"

namespace collatz {

// A finite parity sequence tagged with the map it describes.
//
// C-vectors are validated on construction: a 1 that is not the final bit
// must be followed by 0, since 3n+1 is always even.
class ParityVector {
public:
    using Bits = std::vector<std::uint8_t>;

    ParityVector() = default;
    ParityVector(Bits bits, MapKind map);

    // "0110", optionally prefixed "C:" or "T:" (prefix overrides `map`).
    static ParityVector parse(std::string_view text, MapKind map);

    MapKind map() const noexcept { return map_; }
    const Bits& bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }

    std::size_t ones() const noexcept;
    bool ends_with(const ParityVector& suffix) const noexcept;
    ParityVector prefix(std::size_t len) const;
    ParityVector concat(const ParityVector& tail) const;

    std::string bit_string() const;  // "10100001"
    std::string tagged() const;      // "C:10100001"

    friend bool operator==(const ParityVector&, const ParityVector&) = default;

private:
    Bits bits_;
    MapKind map_ = MapKind::T;
};

// Full-orbit vector; the last bit is the terminal 1.
ParityVector parity_vector(u128 n, MapKind map, std::uint64_t step_cap = default_step_cap);

// Parities of n, f(n), ..., f^{k-1}(n), iterating past 1 if needed.
ParityVector parity_prefix(u128 n, std::size_t k, MapKind map);

// T -> C: every 1 becomes 1,0.
ParityVector expand_t_to_c(const ParityVector& w);

// C -> T: every 1,0 becomes 1; a trailing lone 1 stays 1.
ParityVector compress_c_to_t(const ParityVector& w);

// Terras bijection between length-k T-vectors and residues mod 2^k (k <= 127).
u128 terras_encode(const ParityVector& w);
ParityVector terras_decode(u128 residue, std::size_t k);

}  // namespace collatz
