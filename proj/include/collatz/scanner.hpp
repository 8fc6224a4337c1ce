#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "collatz/pairs.hpp"

namespace collatz {

inline constexpr std::uint64_t default_chunk_size = std::uint64_t{1} << 16;
inline constexpr std::size_t default_list_cap = 1'000'000;
// Entries beyond this are not cached; orbits are iterated down into the table.
inline constexpr std::uint64_t default_cache_cap = std::uint64_t{1} << 30;

inline constexpr const char* range_convention = "pairs (n, n+1) with from <= n < to";

// One line of the per-pair CSV / JSON-lines output.
struct PairRow {
    std::uint64_t n = 0;
    std::uint32_t height = 0;
    std::uint32_t coincide_step = 0;
    u128 coincide_value = 0;
    bool compliant = false;
    bool counterexample = false;

    friend bool operator==(const PairRow&, const PairRow&) = default;
};

struct ScanReport {
    std::uint64_t from = 0;
    std::uint64_t to = 0;
    std::string convention = range_convention;
    std::uint64_t same_height_pairs = 0;
    std::uint64_t compliant_pairs = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t degenerate_pairs = 0;
    // Same-height pairs that are not consecutive-and-4-mod-8 at step k-3.
    // Every counterexample is one of these; the converse does not hold.
    std::uint64_t strict_failures = 0;
    std::vector<std::uint64_t> counterexample_list;
    bool list_truncated = false;
    std::chrono::microseconds elapsed{0};

    // Everything except timing.
    bool same_census(const ScanReport& other) const;
    friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

struct ScanOptions {
    unsigned workers = 1;
    std::uint64_t chunk_size = default_chunk_size;
    std::size_t list_cap = default_list_cap;
    std::uint64_t cache_cap = default_cache_cap;
    // Resumable scans: progress is persisted after every wave of chunks.
    std::optional<std::filesystem::path> checkpoint;
    // Receives every same-height pair in increasing n (only for chunks
    // processed by this call).
    std::function<void(const PairRow&)> on_pair;
};

ScanReport scan_range(std::uint64_t from, std::uint64_t to, const ScanOptions& options = {});

// Smallest counterexample n < limit.
std::optional<std::uint64_t> first_counterexample(std::uint64_t limit);

struct FamilyReport {
    u128 base = 0;
    std::uint32_t modulus_exponent = 0;
    std::uint64_t checked = 0;
    bool all_same_height = true;
    bool all_counterexamples = true;
    // First min(e, |T-form|) T-parities of n and n+1 match the base pair's.
    bool all_prefix_agree = true;
    std::vector<std::uint64_t> failures;  // m values
};

// Checks n = 2^e m + base for m in [0, count).
FamilyReport verify_family(u128 base, std::uint32_t modulus_exponent, std::uint64_t count);

struct Ratio {
    std::uint64_t counterexamples = 0;
    std::uint64_t same_height_pairs = 0;
    double value() const {
        return same_height_pairs == 0 ? 0.0 : static_cast<double>(counterexamples) / same_height_pairs;
    }
};

// counterexamples / same-height pairs over [2, limit).
Ratio counterexample_ratio(std::uint64_t limit, const ScanOptions& options = {});

// Writes "n,height" then one row per n in [1, limit). Returns the row count.
std::uint64_t emit_heights(std::uint64_t limit, std::ostream& sink);

}  // namespace collatz
