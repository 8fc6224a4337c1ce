#include "collatz/stems.hpp"

#include <algorithm>
#include <array>

namespace collatz {

namespace {

void require_t_pair(const ParityVector& v, const ParityVector& v_prime) {
    if (v.map() != MapKind::T || v_prime.map() != MapKind::T)
        throw PreconditionError("stem deciders operate on T-vectors");
    if (v.size() != v_prime.size())
        throw PreconditionError("length mismatch: " + std::to_string(v.size()) + " vs " +
                                std::to_string(v_prime.size()));
}

}  // namespace

StemPair garner_stem(std::uint32_t i) {
    ParityVector::Bits s{0};
    ParityVector::Bits sp{1};
    s.insert(s.end(), i, 1);
    sp.insert(sp.end(), i, 1);
    s.insert(s.end(), {0, 1});
    sp.insert(sp.end(), {0, 0});
    return {ParityVector(std::move(s), MapKind::T), ParityVector(std::move(sp), MapKind::T), i};
}

SolutionSet decide_all_x(const ParityVector& v, const ParityVector& v_prime, const BigInt& target) {
    require_t_pair(v, v_prime);
    const AffineMap m = affine_of_vector(v);
    const AffineMap mp = affine_of_vector(v_prime);
    // 2^j D(x) = (3^a - 3^a') x + r - 3^a' - r'
    const BigInt slope = m.multiplier() - mp.multiplier();
    const BigInt rhs = (target << m.d) - m.r + mp.multiplier() + mp.r;
    if (slope == 0) return rhs == 0 ? SolutionSet::all() : SolutionSet::none();
    if (rhs % slope != 0) return SolutionSet::none();
    return SolutionSet::single(rhs / slope);
}

StemVerdict is_corresponding_stem_pair(const ParityVector& s, const ParityVector& s_prime, StemDomain domain) {
    require_t_pair(s, s_prime);
    StemVerdict verdict;
    if (s.empty()) return verdict;
    verdict.equality_holds = decide_all_x(s, s_prime, 0).kind == SolutionSet::Kind::all;

    for (std::size_t len = 1; len < s.size(); ++len) {
        const ParityVector v = s.prefix(len);
        const ParityVector vp = s_prime.prefix(len);
        for (int t : std::array{-1, 0, 1}) {
            const SolutionSet sol = decide_all_x(v, vp, t);
            if (sol.kind == SolutionSet::Kind::none) continue;
            if (sol.kind == SolutionSet::Kind::single && domain == StemDomain::positive && sol.x < 1) continue;
            verdict.violated_prefix_length = len;
            verdict.witness_target = t;
            if (sol.kind == SolutionSet::Kind::single) verdict.witness_x = sol.x;
            return verdict;
        }
    }
    return verdict;
}

bool is_block_prefix(const ParityVector& b, const ParityVector& b_prime) {
    require_t_pair(b, b_prime);
    if (b.empty()) return false;
    return decide_all_x(b, b_prime, -1).kind == SolutionSet::Kind::all;
}

bool ends_with_stem(const ParityVector& w, const ParityVector& w_prime, std::uint32_t i, bool swapped) {
    const StemPair stem = garner_stem(i);
    const auto& first = swapped ? stem.s_prime : stem.s;
    const auto& second = swapped ? stem.s : stem.s_prime;
    return w.ends_with(first) && w_prime.ends_with(second);
}

std::optional<TailStem> tail_stem_index(const ParityVector& w, const ParityVector& w_prime) {
    const std::size_t shortest = std::min(w.size(), w_prime.size());
    if (shortest < 3) return std::nullopt;
    for (auto i = static_cast<std::int64_t>(shortest - 3); i >= 0; --i) {
        const auto idx = static_cast<std::uint32_t>(i);
        if (ends_with_stem(w, w_prime, idx, false)) return TailStem{idx, false};
        if (ends_with_stem(w, w_prime, idx, true)) return TailStem{idx, true};
    }
    return std::nullopt;
}

}  // namespace collatz
