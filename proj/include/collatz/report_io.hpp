#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "collatz/pairs.hpp"
#include "collatz/scanner.hpp"

namespace collatz {

inline constexpr const char* pair_csv_header = "n,height,coincide_step,coincide_value,compliant,counterexample";

std::string to_csv_line(const PairRow& row);
PairRow parse_csv_line(const std::string& line);

nlohmann::json to_json(const PairRow& row);
PairRow pair_row_from_json(const nlohmann::json& j);

// Readers for whole CSV / JSON-lines streams; the CSV reader expects the header.
std::vector<PairRow> read_pair_csv(std::istream& in);
std::vector<PairRow> read_pair_jsonl(std::istream& in);

// Recomputes the census counts from rows; counterexample_list is capped like a scan.
// Rows carry no strict step-(k-3) verdict, so strict_failures stays 0.
ScanReport census_from_rows(std::uint64_t from, std::uint64_t to, const std::vector<PairRow>& rows,
                            std::size_t list_cap = default_list_cap);

nlohmann::json to_json(const ScanReport& report);
ScanReport scan_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PairAnalysis& p);
nlohmann::json to_json(const FamilyReport& f);

// 128-bit values go to JSON as numbers when they fit in 64 bits, else strings.
nlohmann::json u128_to_json(u128 v);
u128 u128_from_json(const nlohmann::json& j);

}  // namespace collatz
