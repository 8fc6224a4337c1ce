#include "doctest.h"

#include <sstream>

#include "collatz/report_io.hpp"

using namespace collatz;

TEST_SUITE("report_io") {

TEST_CASE("u128 json values") {
    CHECK(u128_to_json(5).is_number_unsigned());
    CHECK(u128_from_json(u128_to_json(5)) == 5);
    const u128 big = u128_max - 7;
    CHECK(u128_to_json(big).is_string());
    CHECK(u128_from_json(u128_to_json(big)) == big);
    CHECK_THROWS(u128_from_json(nlohmann::json(-3)));
}

TEST_CASE("csv rows") {
    const PairRow row{3067, 88, 31, 1384, false, true};
    const std::string line = to_csv_line(row);
    CHECK(line == "3067,88,31,1384,false,true");
    CHECK(parse_csv_line(line) == row);
    CHECK_THROWS(parse_csv_line("1,2,3"));
    CHECK_THROWS(parse_csv_line("1,2,3,4,5,x"));
}

TEST_CASE("streams round trip rows from a real scan") {
    std::vector<PairRow> rows;
    ScanOptions o;
    o.on_pair = [&](const PairRow& r) { rows.push_back(r); };
    const ScanReport scanned = scan_range(2, 40'000, o);
    REQUIRE(rows.size() == scanned.same_height_pairs);

    std::stringstream csv;
    csv << pair_csv_header << '\n';
    for (const auto& r : rows) csv << to_csv_line(r) << '\n';
    CHECK(read_pair_csv(csv) == rows);

    std::stringstream jsonl;
    for (const auto& r : rows) jsonl << to_json(r).dump() << '\n';
    CHECK(read_pair_jsonl(jsonl) == rows);

    ScanReport recomputed = census_from_rows(2, 40'000, rows);
    CHECK(recomputed.same_height_pairs == scanned.same_height_pairs);
    CHECK(recomputed.compliant_pairs == scanned.compliant_pairs);
    CHECK(recomputed.counterexamples == scanned.counterexamples);
    CHECK(recomputed.counterexample_list == scanned.counterexample_list);
    CHECK(recomputed.strict_failures == 0);
}

TEST_CASE("csv header is required") {
    std::stringstream bad("1,2,3,4,0,1\n");
    CHECK_THROWS(read_pair_csv(bad));
}

TEST_CASE("scan report json round trip") {
    ScanOptions o;
    o.list_cap = 2;
    const ScanReport r = scan_range(2, 10'000, o);
    const nlohmann::json j = to_json(r);
    CHECK(j["convention"] == range_convention);
    CHECK(j["counterexamples"] == r.counterexamples);
    CHECK(j.contains("elapsed_us"));
    CHECK(scan_report_from_json(j) == r);
    CHECK(scan_report_from_json(nlohmann::json::parse(j.dump())) == r);
}

TEST_CASE("pair analysis and family json") {
    const nlohmann::json p = to_json(analyze_pair(3067));
    CHECK(p["counterexample"] == true);
    CHECK(p["same_height"] == true);
    CHECK(p["coincide_value"] == 1384);
    const nlohmann::json f = to_json(verify_family(3067, 19, 3));
    CHECK(f["checked"] == 3);
    CHECK(f["all_counterexamples"] == true);
}

}
