#include "collatz/report_io.hpp"

#include <istream>
#include <sstream>

namespace collatz {

namespace {

bool parse_bool(const std::string& s) {
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
    throw Error("bad boolean field '" + s + "'");
}

std::uint64_t parse_u64(const std::string& s) {
    const auto v = parse_u128(s);
    if (!v || !fits_u64(*v)) throw Error("bad integer field '" + s + "'");
    return static_cast<std::uint64_t>(*v);
}

}  // namespace

nlohmann::json u128_to_json(u128 v) {
    if (fits_u64(v)) return static_cast<std::uint64_t>(v);
    return to_string(v);
}

u128 u128_from_json(const nlohmann::json& j) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_string()) {
        if (auto v = parse_u128(j.get<std::string>())) return *v;
    }
    throw Error("expected a non-negative integer, got " + j.dump());
}

std::string to_csv_line(const PairRow& row) {
    std::ostringstream out;
    out << row.n << ',' << row.height << ',' << row.coincide_step << ',' << to_string(row.coincide_value) << ','
        << (row.compliant ? "true" : "false") << ',' << (row.counterexample ? "true" : "false");
    return out.str();
}

PairRow parse_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    if (fields.size() != 6) throw Error("expected 6 CSV fields in '" + line + "'");
    PairRow row;
    row.n = parse_u64(fields[0]);
    row.height = static_cast<std::uint32_t>(parse_u64(fields[1]));
    row.coincide_step = static_cast<std::uint32_t>(parse_u64(fields[2]));
    const auto value = parse_u128(fields[3]);
    if (!value) throw Error("bad coincide_value '" + fields[3] + "'");
    row.coincide_value = *value;
    row.compliant = parse_bool(fields[4]);
    row.counterexample = parse_bool(fields[5]);
    return row;
}

nlohmann::json to_json(const PairRow& row) {
    return {{"n", row.n},
            {"height", row.height},
            {"coincide_step", row.coincide_step},
            {"coincide_value", u128_to_json(row.coincide_value)},
            {"compliant", row.compliant},
            {"counterexample", row.counterexample}};
}

PairRow pair_row_from_json(const nlohmann::json& j) {
    return {j.at("n").get<std::uint64_t>(),
            j.at("height").get<std::uint32_t>(),
            j.at("coincide_step").get<std::uint32_t>(),
            u128_from_json(j.at("coincide_value")),
            j.at("compliant").get<bool>(),
            j.at("counterexample").get<bool>()};
}

std::vector<PairRow> read_pair_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != pair_csv_header) throw Error("missing CSV header");
    std::vector<PairRow> rows;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(parse_csv_line(line));
    return rows;
}

std::vector<PairRow> read_pair_jsonl(std::istream& in) {
    std::vector<PairRow> rows;
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) rows.push_back(pair_row_from_json(nlohmann::json::parse(line)));
    return rows;
}

ScanReport census_from_rows(std::uint64_t from, std::uint64_t to, const std::vector<PairRow>& rows,
                            std::size_t list_cap) {
    ScanReport r;
    r.from = from;
    r.to = to;
    for (const auto& row : rows) {
        ++r.same_height_pairs;
        if (row.counterexample) {
            ++r.counterexamples;
            if (r.counterexample_list.size() < list_cap)
                r.counterexample_list.push_back(row.n);
            else
                r.list_truncated = true;
        } else if (row.compliant) {
            ++r.compliant_pairs;
        } else {
            ++r.degenerate_pairs;
        }
    }
    return r;
}

nlohmann::json to_json(const ScanReport& r) {
    return {{"from", r.from},
            {"to", r.to},
            {"convention", r.convention},
            {"same_height_pairs", r.same_height_pairs},
            {"compliant_pairs", r.compliant_pairs},
            {"counterexamples", r.counterexamples},
            {"degenerate_pairs", r.degenerate_pairs},
            {"strict_failures", r.strict_failures},
            {"counterexample_list", r.counterexample_list},
            {"list_truncated", r.list_truncated},
            {"elapsed_us", r.elapsed.count()}};
}

ScanReport scan_report_from_json(const nlohmann::json& j) {
    ScanReport r;
    r.from = j.at("from").get<std::uint64_t>();
    r.to = j.at("to").get<std::uint64_t>();
    r.convention = j.at("convention").get<std::string>();
    r.same_height_pairs = j.at("same_height_pairs").get<std::uint64_t>();
    r.compliant_pairs = j.at("compliant_pairs").get<std::uint64_t>();
    r.counterexamples = j.at("counterexamples").get<std::uint64_t>();
    r.degenerate_pairs = j.at("degenerate_pairs").get<std::uint64_t>();
    r.strict_failures = j.at("strict_failures").get<std::uint64_t>();
    r.counterexample_list = j.at("counterexample_list").get<std::vector<std::uint64_t>>();
    r.list_truncated = j.at("list_truncated").get<bool>();
    r.elapsed = std::chrono::microseconds(j.at("elapsed_us").get<std::int64_t>());
    return r;
}

nlohmann::json to_json(const PairAnalysis& p) {
    nlohmann::json j{{"n", u128_to_json(p.n)},
                     {"height_n", p.height_n},
                     {"height_n1", p.height_n1},
                     {"same_height", p.same_height},
                     {"coincide_step", nullptr},
                     {"coincide_value", nullptr},
                     {"pre_vec_n", nullptr},
                     {"pre_vec_n1", nullptr},
                     {"degenerate", p.degenerate},
                     {"mod8_compliant", p.mod8_compliant},
                     {"residue_meet_step", nullptr},
                     {"stem_index", nullptr},
                     {"stem_swapped", nullptr},
                     {"counterexample", p.counterexample}};
    if (p.coincide) {
        j["coincide_step"] = p.coincide->step;
        j["coincide_value"] = u128_to_json(p.coincide->value);
        j["pre_vec_n"] = p.pre_vec_n.tagged();
        j["pre_vec_n1"] = p.pre_vec_n1.tagged();
    }
    if (p.residue_meet_step) j["residue_meet_step"] = *p.residue_meet_step;
    if (p.stem) {
        j["stem_index"] = p.stem->index;
        j["stem_swapped"] = p.stem->swapped;
    }
    return j;
}

nlohmann::json to_json(const FamilyReport& f) {
    return {{"base", u128_to_json(f.base)},
            {"modulus_exponent", f.modulus_exponent},
            {"checked", f.checked},
            {"all_same_height", f.all_same_height},
            {"all_counterexamples", f.all_counterexamples},
            {"all_prefix_agree", f.all_prefix_agree},
            {"failures", f.failures}};
}

}  // namespace collatz
