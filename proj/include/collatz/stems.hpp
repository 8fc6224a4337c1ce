#pragma once

#include <cstdint>
#include <optional>

#include "collatz/affine.hpp"
#include "collatz/parity.hpp"

namespace collatz {

// Garner's s_i = <0, 1 x i, 0, 1> and s_i' = <1, 1 x i, 0, 0>, as T-vectors.
struct StemPair {
    ParityVector s;
    ParityVector s_prime;
    std::optional<std::uint32_t> index;
};

StemPair garner_stem(std::uint32_t i);

// Solutions x of T_v(x) - T_{v'}(x+1) = target over the integers. Both
// affine forms share the denominator 2^|v|, so the difference is affine in x
// and the set is empty, a single point, or everything.
struct SolutionSet {
    enum class Kind : std::uint8_t { none, all, single };
    Kind kind = Kind::none;
    BigInt x = 0;  // meaningful for Kind::single

    static SolutionSet none() { return {}; }
    static SolutionSet all() { return {Kind::all, 0}; }
    static SolutionSet single(BigInt x) { return {Kind::single, std::move(x)}; }

    bool contains(const BigInt& v) const { return kind == Kind::all || (kind == Kind::single && x == v); }

    friend bool operator==(const SolutionSet&, const SolutionSet&) = default;
};

SolutionSet decide_all_x(const ParityVector& v, const ParityVector& v_prime, const BigInt& target);

// Which integers x the prefix conditions quantify over. The equality
// condition is an identity either way.
enum class StemDomain : std::uint8_t { positive, all_integers };

struct StemVerdict {
    bool equality_holds = false;
    std::optional<std::size_t> violated_prefix_length;
    std::optional<BigInt> witness_x;
    std::optional<int> witness_target;  // which of -1, 0, 1 was hit

    bool holds() const { return equality_holds && !violated_prefix_length; }
};

// LaTourette corresponding stems. Empty inputs yield a failing verdict.
StemVerdict is_corresponding_stem_pair(const ParityVector& s, const ParityVector& s_prime,
                                       StemDomain domain = StemDomain::positive);

// T_b(x) + 1 = T_{b'}(x+1) identically. Empty inputs yield false.
bool is_block_prefix(const ParityVector& b, const ParityVector& b_prime);

struct TailStem {
    std::uint32_t index;
    bool swapped;  // true when w ends in s_i' and w' ends in s_i

    friend bool operator==(const TailStem&, const TailStem&) = default;
};

bool ends_with_stem(const ParityVector& w, const ParityVector& w_prime, std::uint32_t i, bool swapped);

// Largest i for which the two vectors end in (s_i, s_i') in either order.
std::optional<TailStem> tail_stem_index(const ParityVector& w, const ParityVector& w_prime);

}  // namespace collatz
