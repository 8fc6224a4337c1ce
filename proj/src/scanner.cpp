#include "collatz/scanner.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <ostream>
#include <thread>

#include "collatz/report_io.hpp"

namespace collatz {

namespace {

struct ChunkResult {
    std::uint64_t same_height = 0;
    std::uint64_t compliant = 0;
    std::uint64_t counterexamples = 0;
    std::uint64_t degenerate = 0;
    std::uint64_t strict_failures = 0;
    std::vector<std::uint64_t> found;
    std::vector<PairRow> rows;
};

ChunkResult scan_chunk(std::uint64_t lo, std::uint64_t hi, const HeightCache& cache, bool keep_rows) {
    ChunkResult r;
    for (std::uint64_t n = lo; n < hi; ++n) {
        const PairClass c = classify_pair(n, cache);
        if (!c.same_height) continue;
        ++r.same_height;
        if (c.degenerate) {
            ++r.degenerate;
        } else if (c.counterexample) {
            ++r.counterexamples;
            r.found.push_back(n);
        } else {
            ++r.compliant;
        }
        if (!c.degenerate && !c.strict_compliant) ++r.strict_failures;
        if (keep_rows)
            r.rows.push_back({n, c.height, c.coincide_step, c.coincide_value, c.compliant(), c.counterexample});
    }
    return r;
}

struct Checkpoint {
    std::uint64_t next_chunk = 0;
    ScanReport partial;
};

std::optional<Checkpoint> load_checkpoint(const std::filesystem::path& path, std::uint64_t from, std::uint64_t to,
                                          std::uint64_t chunk_size) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    const nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("from").get<std::uint64_t>() != from || j.at("to").get<std::uint64_t>() != to ||
        j.at("chunk_size").get<std::uint64_t>() != chunk_size)
        throw Error("checkpoint " + path.string() + " belongs to a different scan");
    return Checkpoint{j.at("next_chunk").get<std::uint64_t>(), scan_report_from_json(j.at("report"))};
}

void save_checkpoint(const std::filesystem::path& path, std::uint64_t chunk_size, std::uint64_t next_chunk,
                     const ScanReport& partial) {
    const nlohmann::json j{{"from", partial.from},
                           {"to", partial.to},
                           {"chunk_size", chunk_size},
                           {"next_chunk", next_chunk},
                           {"report", to_json(partial)}};
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << j.dump(2) << '\n';
        if (!out) throw Error("cannot write checkpoint " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

void merge(ScanReport& report, ChunkResult&& chunk, std::size_t list_cap) {
    report.same_height_pairs += chunk.same_height;
    report.compliant_pairs += chunk.compliant;
    report.counterexamples += chunk.counterexamples;
    report.degenerate_pairs += chunk.degenerate;
    report.strict_failures += chunk.strict_failures;
    for (std::uint64_t n : chunk.found) {
        if (report.counterexample_list.size() < list_cap)
            report.counterexample_list.push_back(n);
        else
            report.list_truncated = true;
    }
}

}  // namespace

bool ScanReport::same_census(const ScanReport& o) const {
    return from == o.from && to == o.to && convention == o.convention && same_height_pairs == o.same_height_pairs &&
           compliant_pairs == o.compliant_pairs && counterexamples == o.counterexamples &&
           degenerate_pairs == o.degenerate_pairs && strict_failures == o.strict_failures &&
           counterexample_list == o.counterexample_list &&
           list_truncated == o.list_truncated;
}

ScanReport scan_range(std::uint64_t from, std::uint64_t to, const ScanOptions& options) {
    if (from < 1 || from >= to) throw PreconditionError("scan_range: need 1 <= from < to");
    if (options.workers == 0) throw PreconditionError("scan_range: workers must be positive");
    if (options.chunk_size == 0) throw PreconditionError("scan_range: chunk size must be positive");
    const auto started = std::chrono::steady_clock::now();

    ScanReport report;
    report.from = from;
    report.to = to;
    std::uint64_t next_chunk = 0;
    if (options.checkpoint) {
        if (auto cp = load_checkpoint(*options.checkpoint, from, to, options.chunk_size)) {
            report = std::move(cp->partial);
            next_chunk = cp->next_chunk;
        }
    }
    const std::chrono::microseconds prior_elapsed = report.elapsed;

    const std::uint64_t chunks = (to - from + options.chunk_size - 1) / options.chunk_size;
    if (next_chunk < chunks) {
        // n+1 reaches `to`.
        const HeightCache cache = HeightCache::build(std::min(to, options.cache_cap));
        const bool keep_rows = static_cast<bool>(options.on_pair);
        const std::uint64_t wave = std::uint64_t{options.workers} * 4;

        while (next_chunk < chunks) {
            const std::uint64_t wave_end = std::min(chunks, next_chunk + wave);
            std::vector<ChunkResult> results(wave_end - next_chunk);
            std::atomic<std::uint64_t> cursor{next_chunk};
            std::exception_ptr failure;
            std::atomic<bool> failed{false};
            auto work = [&] {
                try {
                    for (std::uint64_t c; !failed && (c = cursor.fetch_add(1)) < wave_end;) {
                        const std::uint64_t lo = from + c * options.chunk_size;
                        const std::uint64_t hi = std::min(to, lo + options.chunk_size);
                        results[c - next_chunk] = scan_chunk(lo, hi, cache, keep_rows);
                    }
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            };
            const unsigned threads =
                static_cast<unsigned>(std::min<std::uint64_t>(options.workers, wave_end - next_chunk));
            if (threads <= 1) {
                work();
            } else {
                std::vector<std::jthread> pool;
                pool.reserve(threads);
                for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
            }
            if (failure) std::rethrow_exception(failure);

            for (auto& r : results) {
                if (keep_rows)
                    for (const auto& row : r.rows) options.on_pair(row);
                merge(report, std::move(r), options.list_cap);
            }
            next_chunk = wave_end;
            if (options.checkpoint) {
                report.elapsed = prior_elapsed + std::chrono::duration_cast<std::chrono::microseconds>(
                                                     std::chrono::steady_clock::now() - started);
                save_checkpoint(*options.checkpoint, options.chunk_size, next_chunk, report);
            }
        }
    }
    report.elapsed = prior_elapsed +
                     std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
    return report;
}

std::optional<std::uint64_t> first_counterexample(std::uint64_t limit) {
    if (limit < 2) throw PreconditionError("first_counterexample: limit must be at least 2");
    const HeightCache cache = HeightCache::build(std::min(limit, default_cache_cap));
    for (std::uint64_t n = 1; n < limit; ++n)
        if (classify_pair(n, cache).counterexample) return n;
    return std::nullopt;
}

FamilyReport verify_family(u128 base, std::uint32_t modulus_exponent, std::uint64_t count) {
    if (base < 1) throw PreconditionError("verify_family: base must be positive");
    if (modulus_exponent < 1 || modulus_exponent > 120)
        throw PreconditionError("verify_family: modulus exponent must be in [1, 120]");
    FamilyReport f;
    f.base = base;
    f.modulus_exponent = modulus_exponent;

    const PairAnalysis base_pair = analyze_pair(base);
    std::size_t lo_len = modulus_exponent;
    std::size_t hi_len = modulus_exponent;
    if (base_pair.same_height) {
        lo_len = std::min(lo_len, t_form(base_pair.pre_vec_n).size());
        hi_len = std::min(hi_len, t_form(base_pair.pre_vec_n1).size());
    }
    const ParityVector base_lo = parity_prefix(base, lo_len, MapKind::T);
    const ParityVector base_hi = parity_prefix(base + 1, hi_len, MapKind::T);

    for (std::uint64_t m = 0; m < count; ++m) {
        const u128 offset = static_cast<u128>(m) << modulus_exponent;
        if ((offset >> modulus_exponent) != m || offset > u128_max - base - 1)
            throw OverflowError(static_cast<u128>(m));
        const u128 n = offset + base;
        const PairAnalysis p = analyze_pair(n);
        const bool prefix_ok =
            parity_prefix(n, lo_len, MapKind::T) == base_lo && parity_prefix(n + 1, hi_len, MapKind::T) == base_hi;
        f.all_same_height = f.all_same_height && p.same_height;
        f.all_prefix_agree = f.all_prefix_agree && prefix_ok;
        if (!(p.same_height && p.counterexample)) {
            f.all_counterexamples = false;
            f.failures.push_back(m);
        }
        ++f.checked;
    }
    if (f.checked == 0) f.all_counterexamples = f.all_same_height = false;
    return f;
}

Ratio counterexample_ratio(std::uint64_t limit, const ScanOptions& options) {
    if (limit < 2) throw PreconditionError("counterexample_ratio: limit must be at least 2");
    if (limit == 2) return {};
    const ScanReport r = scan_range(2, limit, options);
    return {r.counterexamples, r.same_height_pairs};
}

std::uint64_t emit_heights(std::uint64_t limit, std::ostream& sink) {
    if (limit < 1) throw PreconditionError("emit_heights: limit must be positive");
    sink << "n,height\n";
    const HeightCache cache = HeightCache::build(std::min(limit, default_cache_cap));
    std::uint64_t rows = 0;
    for (std::uint64_t n = 1; n < limit; ++n, ++rows) sink << n << ',' << cache.height(n) << '\n';
    sink.flush();
    if (!sink) throw Error("failed writing height rows");
    return rows;
}

}  // namespace collatz
