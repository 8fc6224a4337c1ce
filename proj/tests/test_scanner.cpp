#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "collatz/report_io.hpp"
#include "collatz/scanner.hpp"
#include "oracles.hpp"

using namespace collatz;

namespace {

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("collatz_lab_test_" + name);
}

}  // namespace

TEST_SUITE("scanner") {

TEST_CASE("small census") {
    const ScanReport r = scan_range(12, 14);
    CHECK(r.same_height_pairs == 1);
    CHECK(r.compliant_pairs == 1);
    CHECK(r.counterexamples == 0);
    CHECK(scan_range(2, 3067).counterexamples == 0);
    const ScanReport with_first = scan_range(2, 3068);
    CHECK(with_first.counterexamples == 1);
    CHECK(with_first.counterexample_list == std::vector<std::uint64_t>{3067});
    CHECK_THROWS_AS(scan_range(5, 5), PreconditionError);
    CHECK_THROWS_AS(scan_range(0, 5), PreconditionError);
}

TEST_CASE("census below one million") {
    const ScanReport r = scan_range(2, 1'000'000);
    CHECK(r.counterexamples == 946);
    CHECK(r.same_height_pairs == r.compliant_pairs + r.counterexamples + r.degenerate_pairs);
    CHECK(r.degenerate_pairs == 0);
    CHECK(r.strict_failures >= r.counterexamples);
    CHECK(std::is_sorted(r.counterexample_list.begin(), r.counterexample_list.end()));
    CHECK(std::adjacent_find(r.counterexample_list.begin(), r.counterexample_list.end()) ==
          r.counterexample_list.end());
    CHECK(r.counterexample_list.size() == 946);
    CHECK(r.counterexample_list[0] == 3067);
    CHECK(r.counterexample_list[1] == 4088);
    CHECK(r.counterexample_list[2] == 6135);
    // Re-verify every listed pair without the cache.
    for (std::uint64_t n : r.counterexample_list) REQUIRE(analyze_pair(n).counterexample);
    // The inclusive reading n <= 1e6 changes nothing here.
    CHECK(scan_range(2, 1'000'001).counterexamples == 946);
}

TEST_CASE("worker count and chunking do not change the report") {
    ScanOptions base;
    base.chunk_size = 4096;
    const ScanReport one = scan_range(2, 300'000, base);
    for (unsigned w : {2u, 8u}) {
        ScanOptions o = base;
        o.workers = w;
        CHECK(scan_range(2, 300'000, o).same_census(one));
    }
    ScanOptions odd;
    odd.chunk_size = 777;
    odd.workers = 3;
    CHECK(scan_range(2, 300'000, odd).same_census(one));
}

TEST_CASE("partition additivity") {
    const ScanReport whole = scan_range(2, 200'000);
    for (std::uint64_t mid : {3ULL, 3067ULL, 3068ULL, 65'538ULL, 123'457ULL}) {
        const ScanReport a = scan_range(2, mid);
        const ScanReport b = scan_range(mid, 200'000);
        CHECK(a.same_height_pairs + b.same_height_pairs == whole.same_height_pairs);
        CHECK(a.compliant_pairs + b.compliant_pairs == whole.compliant_pairs);
        CHECK(a.counterexamples + b.counterexamples == whole.counterexamples);
        CHECK(a.strict_failures + b.strict_failures == whole.strict_failures);
        auto joined = a.counterexample_list;
        joined.insert(joined.end(), b.counterexample_list.begin(), b.counterexample_list.end());
        CHECK(joined == whole.counterexample_list);
    }
}

TEST_CASE("list cap") {
    ScanOptions o;
    o.list_cap = 3;
    const ScanReport r = scan_range(2, 20'000, o);
    CHECK(r.counterexample_list.size() == 3);
    CHECK(r.list_truncated);
    CHECK(r.counterexamples > 3);
}

TEST_CASE("small cache cap still gives exact heights") {
    ScanOptions o;
    o.cache_cap = 1000;
    CHECK(scan_range(2, 50'000, o).same_census(scan_range(2, 50'000)));
}

TEST_CASE("per-pair rows arrive in order") {
    std::vector<PairRow> rows;
    ScanOptions o;
    o.workers = 4;
    o.chunk_size = 1000;
    o.on_pair = [&](const PairRow& r) { rows.push_back(r); };
    const ScanReport r = scan_range(2, 20'000, o);
    CHECK(rows.size() == r.same_height_pairs);
    CHECK(std::is_sorted(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.n < b.n; }));
    for (const auto& row : rows) REQUIRE(row.height == oracle::height(row.n));
}

TEST_CASE("checkpointed scans resume to the same result") {
    const auto cp = temp_path("checkpoint.json");
    std::filesystem::remove(cp);
    ScanOptions o;
    o.chunk_size = 5000;
    o.checkpoint = cp;
    const ScanReport full = scan_range(2, 100'000, o);
    CHECK(std::filesystem::exists(cp));
    CHECK(full.same_census(scan_range(2, 100'000)));

    // Rewind the file to a mid-scan state and resume from it.
    std::ifstream in(cp);
    nlohmann::json j = nlohmann::json::parse(in);
    in.close();
    CHECK(j["next_chunk"] == 20);
    const ScanReport head = scan_range(2, 2 + 4 * 5000, ScanOptions{});
    j["next_chunk"] = 4;
    j["report"] = to_json(head);
    j["report"]["to"] = 100'000;
    std::ofstream(cp) << j.dump();
    std::size_t resumed_rows = 0;
    o.on_pair = [&](const PairRow&) { ++resumed_rows; };
    const ScanReport resumed = scan_range(2, 100'000, o);
    CHECK(resumed.same_census(full));
    CHECK(resumed_rows == full.same_height_pairs - head.same_height_pairs);

    // A checkpoint for another range is refused.
    CHECK_THROWS_AS(scan_range(2, 50'000, o), Error);
    std::filesystem::remove(cp);
}

TEST_CASE("first counterexample") {
    CHECK(first_counterexample(10'000) == 3067u);
    CHECK_FALSE(first_counterexample(3000));
    CHECK_FALSE(first_counterexample(3067));
    CHECK(first_counterexample(3068) == 3067u);
    CHECK_THROWS_AS(first_counterexample(1), PreconditionError);
    const ScanReport r = scan_range(2, 7000);
    CHECK(r.counterexample_list == std::vector<std::uint64_t>{3067, 4088, 6135});
}

TEST_CASE("2^19 m + 3067 family") {
    const FamilyReport one = verify_family(3067, 19, 1);
    CHECK(one.all_same_height);
    CHECK(one.all_counterexamples);
    const FamilyReport hundred = verify_family(3067, 19, 100);
    CHECK(hundred.checked == 100);
    CHECK(hundred.all_same_height);
    CHECK(hundred.all_counterexamples);
    CHECK(hundred.all_prefix_agree);
    CHECK(hundred.failures.empty());
    const FamilyReport compliant = verify_family(12, 3, 10);
    CHECK(compliant.all_same_height);
    CHECK_FALSE(compliant.all_counterexamples);
    CHECK(compliant.failures.size() == 10);
    // A modulus too small to pin the parity vectors breaks the family.
    CHECK_FALSE(verify_family(3067, 4, 20).all_counterexamples);
    CHECK_THROWS_AS(verify_family(3067, 0, 1), PreconditionError);
}

TEST_CASE("counterexample ratio") {
    CHECK(counterexample_ratio(3000).counterexamples == 0);
    CHECK(counterexample_ratio(3000).value() == 0.0);
    const Ratio r = counterexample_ratio(1'000'000);
    CHECK(r.counterexamples == 946);
    CHECK(r.same_height_pairs == scan_range(2, 1'000'000).same_height_pairs);
    CHECK(r.value() == doctest::Approx(946.0 / r.same_height_pairs));
}

TEST_CASE("height rows for plotting") {
    std::ostringstream four;
    CHECK(emit_heights(4, four) == 3);
    CHECK(four.str() == "n,height\n1,0\n2,1\n3,7\n");
    std::ostringstream one;
    CHECK(emit_heights(1, one) == 0);
    CHECK(one.str() == "n,height\n");
    std::ostringstream fourteen;
    emit_heights(14, fourteen);
    CHECK(fourteen.str().find("\n12,9\n13,9\n") != std::string::npos);
    std::ofstream closed;
    CHECK_THROWS_AS(emit_heights(3, closed), Error);
}

}
