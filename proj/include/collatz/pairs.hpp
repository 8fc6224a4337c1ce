#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "collatz/height_cache.hpp"
#include "collatz/parity.hpp"
#include "collatz/stems.hpp"

namespace collatz {

struct Coincidence {
    std::uint32_t step;  // smallest k with C^k(n) = C^k(n+1)
    u128 value;

    friend bool operator==(const Coincidence&, const Coincidence&) = default;
};

// Index-aligned search over the truncated C-orbits of n and n+1.
std::optional<Coincidence> coincidence(u128 n, std::uint64_t step_cap = default_step_cap);

// True iff, at step k-3, one member is 4 mod 8 and the other is that value
// plus one. Throws PreconditionError for k < 3 (degenerate pair).
bool mod8_compliance(u128 n, std::uint32_t k);

// Same test on already-known step-(k-3) values.
bool mod8_compliant_values(u128 lower_at, u128 upper_at);

// True when the two values are 4 and 5 mod 8, in either order.
inline bool residues_4_5(u128 a, u128 b) {
    const unsigned ra = static_cast<unsigned>(a & 7);
    const unsigned rb = static_cast<unsigned>(b & 7);
    return (ra == 4 && rb == 5) || (ra == 5 && rb == 4);
}

struct PairAnalysis {
    u128 n = 0;
    std::uint32_t height_n = 0;
    std::uint32_t height_n1 = 0;
    bool same_height = false;
    std::optional<Coincidence> coincide;
    ParityVector pre_vec_n{{}, MapKind::C};   // parities of C^0..C^{k-1}(n)
    ParityVector pre_vec_n1{{}, MapKind::C};  // same for n+1
    bool degenerate = false;                  // same height with k < 3
    // Strict form: consecutive at step k-3 with the smaller one 4 mod 8.
    bool mod8_compliant = false;
    // First step j < k at which the orbits sit at 4 and 5 mod 8.
    std::optional<std::uint32_t> residue_meet_step;
    std::optional<TailStem> stem;
    // Same height, not degenerate, and no residue meeting before the merge.
    bool counterexample = false;
};

PairAnalysis analyze_pair(u128 n, std::uint64_t step_cap = default_step_cap);

// The pre-coincidence vectors in T form. The coincidence value (always even)
// contributes the halving that closes the final odd step, so each C-vector
// gets a trailing 0 before compression.
ParityVector t_form(const ParityVector& pre_vec_c);

struct PreCoincidence {
    std::vector<u128> lower;  // C^0(n) .. C^{k-1}(n)
    std::vector<u128> upper;  // C^0(n+1) .. C^{k-1}(n+1)
    u128 value;               // C^k of both
};

// Throws PreconditionError unless n and n+1 have the same height.
PreCoincidence pre_coincidence_values(u128 n, std::uint64_t step_cap = default_step_cap);

struct Theorem8k4Result {
    bool holds;
    u128 shared_value;  // 6k+4
};

// Checks 8k+4 -> 4k+2 -> 2k+1 -> 6k+4 and 8k+5 -> 24k+16 -> 12k+8 -> 6k+4.
Theorem8k4Result theorem_8k4_check(u128 n);

// Number of trailing elements, coincidence value included, that all listed
// pairs share on both merging branches. 0 if the pairs merge at different
// values. The branch whose last pre-value is odd is aligned with the other
// pairs' odd branches.
std::size_t shared_merge_suffix(std::span<const u128> pair_starts);

// Fast classification for scanning. Uses the cache for heights and walks
// the two orbits only when the heights agree.
struct PairClass {
    bool same_height = false;
    std::uint32_t height = 0;  // of n
    std::uint32_t coincide_step = 0;
    u128 coincide_value = 0;
    bool degenerate = false;
    bool strict_compliant = false;  // PairAnalysis::mod8_compliant
    bool counterexample = false;
    bool compliant() const { return same_height && !degenerate && !counterexample; }
};

PairClass classify_pair(std::uint64_t n, const HeightCache& cache);

}  // namespace collatz
