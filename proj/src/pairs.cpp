#include "collatz/pairs.hpp"

#include <algorithm>
#include <array>

namespace collatz {

namespace {

u128 iterate_c(u128 n, std::uint32_t steps) {
    for (std::uint32_t i = 0; i < steps; ++i) n = c_step(n);
    return n;
}

ParityVector parities_of(const std::vector<u128>& values, std::size_t count) {
    ParityVector::Bits bits;
    bits.reserve(count);
    for (std::size_t i = 0; i < count; ++i) bits.push_back(static_cast<std::uint8_t>(values[i] & 1));
    return ParityVector(std::move(bits), MapKind::C);
}

std::size_t common_suffix(const std::vector<std::vector<u128>>& seqs) {
    if (seqs.empty()) return 0;
    std::size_t len = 0;
    for (;;) {
        if (len == seqs.front().size()) return len;
        const u128 probe = seqs.front()[seqs.front().size() - 1 - len];
        for (const auto& s : seqs)
            if (len == s.size() || s[s.size() - 1 - len] != probe) return len;
        ++len;
    }
}

}  // namespace

std::optional<Coincidence> coincidence(u128 n, std::uint64_t step_cap) {
    if (n == 0) throw PreconditionError("coincidence: n must be positive");
    if (n == u128_max) throw OverflowError(n);
    const Trajectory lo = trajectory(n, MapKind::C, step_cap);
    const Trajectory hi = trajectory(n + 1, MapKind::C, step_cap);
    const std::size_t shared = std::min(lo.size(), hi.size());
    for (std::size_t j = 0; j < shared; ++j)
        if (lo[j] == hi[j]) return Coincidence{static_cast<std::uint32_t>(j), lo[j]};
    return std::nullopt;
}

bool mod8_compliant_values(u128 lower_at, u128 upper_at) {
    return (lower_at % 8 == 4 && upper_at == lower_at + 1) || (upper_at % 8 == 4 && lower_at == upper_at + 1);
}

bool mod8_compliance(u128 n, std::uint32_t k) {
    if (k < 3)
        throw PreconditionError("degenerate pair n = " + to_string(n) + ": coincidence step " + std::to_string(k) +
                                " < 3");
    const u128 a = iterate_c(n, k - 3);
    const u128 b = iterate_c(n + 1, k - 3);
    if (iterate_c(a, 3) != iterate_c(b, 3))
        throw PreconditionError("n = " + to_string(n) + " and n+1 do not coincide at step " + std::to_string(k));
    return mod8_compliant_values(a, b);
}

ParityVector t_form(const ParityVector& pre_vec_c) {
    return compress_c_to_t(pre_vec_c.concat(ParityVector({0}, MapKind::C)));
}

PairAnalysis analyze_pair(u128 n, std::uint64_t step_cap) {
    if (n == 0) throw PreconditionError("analyze_pair: n must be positive");
    if (n == u128_max) throw OverflowError(n);
    PairAnalysis p;
    p.n = n;
    const Trajectory lo = trajectory(n, MapKind::C, step_cap);
    const Trajectory hi = trajectory(n + 1, MapKind::C, step_cap);
    p.height_n = static_cast<std::uint32_t>(lo.steps());
    p.height_n1 = static_cast<std::uint32_t>(hi.steps());
    p.same_height = p.height_n == p.height_n1;
    if (!p.same_height) return p;

    std::uint32_t k = 0;
    for (; lo[k] != hi[k]; ++k)
        if (!p.residue_meet_step && residues_4_5(lo[k], hi[k])) p.residue_meet_step = k;
    p.coincide = Coincidence{k, lo[k]};
    p.pre_vec_n = parities_of(lo.values(), k);
    p.pre_vec_n1 = parities_of(hi.values(), k);
    p.stem = tail_stem_index(t_form(p.pre_vec_n), t_form(p.pre_vec_n1));
    if (k < 3) {
        p.degenerate = true;
        return p;
    }
    p.mod8_compliant = mod8_compliant_values(lo[k - 3], hi[k - 3]);
    p.counterexample = !p.residue_meet_step;
    return p;
}

PreCoincidence pre_coincidence_values(u128 n, std::uint64_t step_cap) {
    if (n == 0) throw PreconditionError("pre_coincidence_values: n must be positive");
    if (n == u128_max) throw OverflowError(n);
    const Trajectory lo = trajectory(n, MapKind::C, step_cap);
    const Trajectory hi = trajectory(n + 1, MapKind::C, step_cap);
    if (lo.size() != hi.size())
        throw PreconditionError("n = " + to_string(n) + " and n+1 do not have the same height");
    std::size_t k = 0;
    while (lo[k] != hi[k]) ++k;
    const auto cut = static_cast<std::ptrdiff_t>(k);
    return {{lo.values().begin(), lo.values().begin() + cut}, {hi.values().begin(), hi.values().begin() + cut}, lo[k]};
}

Theorem8k4Result theorem_8k4_check(u128 n) {
    if (n <= 4 || n % 8 != 4)
        throw PreconditionError("theorem check needs n > 4 with n = 4 (mod 8), got " + to_string(n));
    const u128 k = (n - 4) / 8;
    const std::array<u128, 4> lower{8 * k + 4, 4 * k + 2, 2 * k + 1, 6 * k + 4};
    const std::array<u128, 4> upper{8 * k + 5, 24 * k + 16, 12 * k + 8, 6 * k + 4};
    bool holds = true;
    u128 a = n;
    u128 b = n + 1;
    for (std::size_t i = 0; i < 4; ++i) {
        holds = holds && a == lower[i] && b == upper[i];
        if (i < 3) {
            a = c_step(a);
            b = c_step(b);
        }
    }
    return {holds && a == b, a};
}

std::size_t shared_merge_suffix(std::span<const u128> pair_starts) {
    std::vector<std::vector<u128>> odd_branches;
    std::vector<std::vector<u128>> even_branches;
    std::optional<u128> merge_value;
    for (u128 n : pair_starts) {
        PreCoincidence pc = pre_coincidence_values(n);
        if (merge_value && *merge_value != pc.value) return 0;
        merge_value = pc.value;
        if (pc.lower.empty()) return 0;
        pc.lower.push_back(pc.value);
        pc.upper.push_back(pc.value);
        // The odd branch reaches the merge value by 3x+1.
        const bool lower_is_odd = (pc.lower[pc.lower.size() - 2] & 1) != 0;
        odd_branches.push_back(std::move(lower_is_odd ? pc.lower : pc.upper));
        even_branches.push_back(std::move(lower_is_odd ? pc.upper : pc.lower));
    }
    return std::min(common_suffix(odd_branches), common_suffix(even_branches));
}

PairClass classify_pair(std::uint64_t n, const HeightCache& cache) {
    PairClass c;
    c.height = cache.height(n);
    const std::uint32_t h1 = cache.height(static_cast<u128>(n) + 1);
    c.same_height = c.height == h1;
    if (!c.same_height) return c;

    std::array<u128, 4> lo_hist{};
    std::array<u128, 4> hi_hist{};
    u128 a = n;
    u128 b = static_cast<u128>(n) + 1;
    std::uint32_t k = 0;
    bool met = false;
    while (a != b) {
        met = met || residues_4_5(a, b);
        lo_hist[k & 3] = a;
        hi_hist[k & 3] = b;
        a = c_step(a);
        b = c_step(b);
        ++k;
    }
    c.coincide_step = k;
    c.coincide_value = a;
    if (k < 3) {
        c.degenerate = true;
        return c;
    }
    c.strict_compliant = mod8_compliant_values(lo_hist[(k - 3) & 3], hi_hist[(k - 3) & 3]);
    c.counterexample = !met;
    return c;
}

}  // namespace collatz
