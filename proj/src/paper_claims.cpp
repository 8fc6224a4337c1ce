#include "collatz/paper_claims.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "collatz/affine.hpp"
#include "collatz/pairs.hpp"
#include "collatz/parity.hpp"
#include "collatz/scanner.hpp"
#include "collatz/stems.hpp"

namespace collatz {

namespace {

template <typename T>
std::string join(const std::vector<T>& xs) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ',';
        if constexpr (std::is_same_v<T, u128>)
            out << to_string(xs[i]);
        else
            out << xs[i];
    }
    out << ']';
    return out.str();
}

ClaimOutcome equal(const std::string& observed, const std::string& expected) {
    return {observed == expected, observed, expected};
}

ClaimOutcome height_and_trajectory() {
    std::ostringstream obs;
    obs << "H(3)=" << height(3) << " C:" << join(trajectory(3, MapKind::C).values())
        << " T:" << join(trajectory(3, MapKind::T).values()) << ' ' << parity_vector(3, MapKind::C).tagged() << ' '
        << parity_vector(3, MapKind::T).tagged();
    return equal(obs.str(), "H(3)=7 C:[3,10,5,16,8,4,2,1] T:[3,5,8,4,2,1] C:10100001 T:110001");
}

ClaimOutcome theorem_8k4() {
    std::uint64_t failures = 0;
    std::uint64_t first_bad = 0;
    for (std::uint64_t n = 12; n <= 1'000'000; n += 8) {
        const bool ok = theorem_8k4_check(n).holds && height(n) == height(n + 1);
        if (!ok && failures++ == 0) first_bad = n;
    }
    std::string obs = "failures=" + std::to_string(failures);
    if (failures) obs += " first=" + std::to_string(first_bad);
    return equal(obs, "failures=0");
}

ClaimOutcome first_same_height_pair() {
    std::uint64_t n = 1;
    while (height(n) != height(n + 1)) ++n;
    const auto c = coincidence(n);
    std::ostringstream obs;
    obs << "n=" << n << " k=" << (c ? c->step : 0) << " value=" << (c ? to_string(c->value) : "none");
    return equal(obs.str(), "n=12 k=3 value=10");
}

ClaimOutcome preimages() {
    const AffineMap low = affine_of_vector(ParityVector::parse("001", MapKind::C));
    const AffineMap high = affine_of_vector(ParityVector::parse("100", MapKind::C));
    std::ostringstream obs;
    obs << "001->" << affine_preimage(low, 10) << " 100->" << affine_preimage(high, 10);
    return equal(obs.str(), "001->12 100->13");
}

ClaimOutcome terras() {
    std::ostringstream obs;
    obs << "001->" << to_string(terras_encode(ParityVector::parse("001", MapKind::T))) << " 100->"
        << to_string(terras_encode(ParityVector::parse("100", MapKind::T)));
    std::uint64_t mismatches = 0;
    for (std::size_t k = 1; k <= 12; ++k)
        for (u128 x = 0; x < (u128{1} << k); ++x)
            if (terras_encode(terras_decode(x, k)) != x) ++mismatches;
    obs << " roundtrip_mismatches=" << mismatches;
    return equal(obs.str(), "001->4 100->5 roundtrip_mismatches=0");
}

ClaimOutcome first_counterexample_vectors() {
    const auto first = first_counterexample(10'000);
    const PairAnalysis p = analyze_pair(3067);
    std::ostringstream obs;
    obs << "first=" << (first ? std::to_string(*first) : "none") << " k=" << (p.coincide ? p.coincide->step : 0)
        << " value=" << (p.coincide ? to_string(p.coincide->value) : "none") << " n=" << p.pre_vec_n.bit_string()
        << " n1=" << p.pre_vec_n1.bit_string() << " counterexample=" << p.counterexample;
    return equal(obs.str(),
                 "first=3067 k=27 value=1384 n=101001010010100100100010001 n1=001010101010101010010010000 "
                 "counterexample=1");
}

ClaimOutcome million_census(unsigned workers) {
    ScanOptions opts;
    opts.workers = workers;
    const ScanReport r = scan_range(2, 1'000'000, opts);
    return equal("counterexamples=" + std::to_string(r.counterexamples) + " (" + r.convention + ")",
                 "counterexamples=946 (" + std::string(range_convention) + ")");
}

ClaimOutcome merge_group() {
    ScanOptions opts;
    const ScanReport r = scan_range(2, 40'000, opts);
    const auto& list = r.counterexample_list;
    auto found = [&](std::uint64_t n) { return std::find(list.begin(), list.end(), n) != list.end(); };
    const std::array<u128, 3> trio{3067, 4088, 6135};
    const std::array<u128, 4> quad{3067, 4088, 6135, 32743};
    std::ostringstream obs;
    obs << "detected=" << (found(4088) && found(6135) && found(32743)) << " merge=" << to_string(coincidence(4088)->value)
        << " trio_shared=" << shared_merge_suffix(trio) << " with_32743=" << shared_merge_suffix(quad);
    return equal(obs.str(), "detected=1 merge=1384 trio_shared=22 with_32743=5");
}

ClaimOutcome family() {
    const FamilyReport f = verify_family(3067, 19, 100);
    std::ostringstream obs;
    obs << "checked=" << f.checked << " same_height=" << f.all_same_height
        << " counterexamples=" << f.all_counterexamples << " prefix_agree=" << f.all_prefix_agree;
    return equal(obs.str(), "checked=100 same_height=1 counterexamples=1 prefix_agree=1");
}

ClaimOutcome garner_stems() {
    std::string failing;
    for (std::uint32_t i = 0; i <= 12; ++i) {
        const StemPair s = garner_stem(i);
        if (!is_corresponding_stem_pair(s.s, s.s_prime).holds()) failing += std::to_string(i) + ' ';
    }
    return equal("failing=[" + failing + "]", "failing=[]");
}

ClaimOutcome worker_independence(unsigned workers) {
    constexpr std::uint64_t from = 2, mid = 4'000'000, to = 10'000'000;
    ScanOptions one;
    ScanOptions many;
    many.workers = std::max(2u, workers);
    const ScanReport a = scan_range(from, to, one);
    const ScanReport b = scan_range(from, to, many);
    const ScanReport left = scan_range(from, mid, one);
    const ScanReport right = scan_range(mid, to, one);
    const bool additive = left.same_height_pairs + right.same_height_pairs == a.same_height_pairs &&
                          left.counterexamples + right.counterexamples == a.counterexamples &&
                          left.compliant_pairs + right.compliant_pairs == a.compliant_pairs;
    std::ostringstream obs;
    obs << "workers_agree=" << a.same_census(b) << " additive=" << additive;
    return equal(obs.str(), "workers_agree=1 additive=1");
}

ClaimOutcome extended_ratio(unsigned workers) {
    ScanOptions opts;
    opts.workers = workers;
    const Ratio r = counterexample_ratio(5'000'000'000ULL, opts);
    std::ostringstream obs;
    obs << r.counterexamples << '/' << r.same_height_pairs << " = " << r.value();
    return {std::abs(r.value() - 0.00214) <= 0.0005, obs.str(), "0.00214 +- 0.0005"};
}

}  // namespace

std::vector<Claim> published_claims(const ClaimOptions& options) {
    const unsigned w = options.workers;
    std::vector<Claim> claims{
        {"height-trajectory", "height of 3, its C/T trajectories and parity vectors", height_and_trajectory},
        {"theorem-8k4", "n = 4 mod 8, 4 < n <= 1e6: C^3(n) = C^3(n+1) and equal heights", theorem_8k4},
        {"first-same-height", "first same-height pair is 12/13, coinciding at step 3 on 10", first_same_height_pair},
        {"preimage-algebra", "inverse affine maps of 001 and 100 at j=10", preimages},
        {"terras-bijection", "001 <-> 4, 100 <-> 5 (mod 8); exhaustive round trip k <= 12", terras},
        {"first-counterexample", "3067/3068: first counterexample, exact 27-bit vectors, merge at 1384",
         first_counterexample_vectors},
        {"census-1e6", "946 counterexample pairs below one million", [w] { return million_census(w); }},
        {"merge-group", "4088, 6135, 32743 detected; shared pre-merge suffixes 22 and 5", merge_group},
        {"family-2^19m+3067", "2^19 m + 3067, m < 100: all same-height counterexamples", family},
        {"garner-stems", "s_i / s_i' are corresponding stems for i <= 12", garner_stems},
        {"scan-determinism", "scan [2, 1e7): worker-count independence and partition additivity",
         [w] { return worker_independence(w); }},
    };
    if (options.extended)
        claims.push_back({"ratio-5e9", "counterexample share below 5e9 is 0.214%", [w] { return extended_ratio(w); }});
    return claims;
}

bool run_claims(const std::vector<Claim>& claims, std::ostream& out) {
    bool all = true;
    for (const auto& claim : claims) {
        const auto started = std::chrono::steady_clock::now();
        ClaimOutcome r;
        try {
            r = claim.check();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what(), "no error"};
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();
        all = all && r.pass;
        out << (r.pass ? "PASS " : "FAIL ") << claim.id << " (" << ms << " ms): " << claim.description
            << "\n     observed: " << r.observed;
        if (!r.pass) out << "\n     expected: " << r.expected;
        out << '\n';
    }
    out << (all ? "all claims verified\n" : "some claims FAILED\n");
    return all;
}

}  // namespace collatz
