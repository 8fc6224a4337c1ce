#include "collatz/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "collatz/affine.hpp"
#include "collatz/pairs.hpp"
#include "collatz/paper_claims.hpp"
#include "collatz/report_io.hpp"
#include "collatz/scanner.hpp"
#include "collatz/stems.hpp"

namespace collatz::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

u128 positive(const std::string& text, const char* what) {
    const auto v = parse_u128(text);
    if (!v || *v == 0) throw UsageError(std::string(what) + " must be a positive integer, got '" + text + "'");
    return *v;
}

std::uint64_t positive64(const std::string& text, const char* what) {
    const u128 v = positive(text, what);
    if (!fits_u64(v)) throw UsageError(std::string(what) + " must fit in 64 bits, got '" + text + "'");
    return static_cast<std::uint64_t>(v);
}

unsigned default_jobs() {
    if (const char* env = std::getenv("COLLATZ_LAB_JOBS")) {
        const auto v = parse_u128(env);
        if (v && *v > 0 && *v < 4096) return static_cast<unsigned>(*v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

nlohmann::json values_json(const std::vector<u128>& values) {
    auto arr = nlohmann::json::array();
    for (u128 v : values) arr.push_back(u128_to_json(v));
    return arr;
}

std::string joined(const std::vector<u128>& values, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += sep;
        s += to_string(values[i]);
    }
    return s;
}

std::string solution_text(const SolutionSet& s) {
    switch (s.kind) {
        case SolutionSet::Kind::all: return "all";
        case SolutionSet::Kind::single: return s.x.str();
        case SolutionSet::Kind::none: break;
    }
    return "none";
}

nlohmann::json solution_json(const SolutionSet& s) {
    if (s.kind == SolutionSet::Kind::single) return s.x.str();
    return solution_text(s);
}

void print_pair(const PairAnalysis& p, std::ostream& out) {
    auto line = [&](const char* key, const std::string& value) {
        out << std::left << std::setw(18) << key << value << '\n';
    };
    line("n", to_string(p.n));
    line("height(n)", std::to_string(p.height_n));
    line("height(n+1)", std::to_string(p.height_n1));
    line("same_height", p.same_height ? "yes" : "no");
    if (p.coincide) {
        line("coincide_step", std::to_string(p.coincide->step));
        line("coincide_value", to_string(p.coincide->value));
        line("pre_vec_n", p.pre_vec_n.tagged());
        line("pre_vec_n1", p.pre_vec_n1.tagged());
        line("degenerate", p.degenerate ? "yes" : "no");
        line("mod8_compliant", p.mod8_compliant ? "yes" : "no");
        line("residue_meet", p.residue_meet_step ? "step " + std::to_string(*p.residue_meet_step) : "never");
        line("stem", p.stem ? "s_" + std::to_string(p.stem->index) + (p.stem->swapped ? " (swapped)" : "")
                            : "none");
    }
    line("counterexample", p.counterexample ? "yes" : "no");
}

void print_report(const ScanReport& r, std::ostream& out) {
    out << "range              [" << r.from << ", " << r.to << ")  " << r.convention << '\n'
        << "same_height_pairs  " << r.same_height_pairs << '\n'
        << "compliant_pairs    " << r.compliant_pairs << '\n'
        << "counterexamples    " << r.counterexamples << '\n'
        << "degenerate_pairs   " << r.degenerate_pairs << '\n'
        << "strict_failures    " << r.strict_failures << '\n'
        << "first_listed       ";
    for (std::size_t i = 0; i < std::min<std::size_t>(10, r.counterexample_list.size()); ++i)
        out << (i ? " " : "") << r.counterexample_list[i];
    out << (r.list_truncated ? " (list truncated)" : "") << '\n'
        << "elapsed_ms         " << r.elapsed.count() / 1000 << '\n';
}

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw Error("cannot open '" + path + "' for writing");
    return f;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Collatz consecutive-pair laboratory", "collatz-lab"};
    app.require_subcommand(1);

    bool json = false;
    bool csv = false;
    std::string map_text = "c";
    std::string stem_map_text = "t";
    std::string n_text;
    std::string out_path;
    std::string checkpoint_path;
    std::string from_text = "2";
    std::string to_text;
    std::string limit_text;
    std::string base_text = "3067";
    std::string count_text = "100";
    std::uint32_t modulus_exp = 19;
    std::uint32_t stem_i = 0;
    unsigned jobs = default_jobs();
    bool extended = false;
    bool all_integers = false;
    std::string v1_text;
    std::string v2_text;

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "machine-readable JSON output"); };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", jobs, "worker threads (default: $COLLATZ_LAB_JOBS or all cores)")
            ->check(CLI::Range(1u, 4096u));
    };

    auto* height_cmd = app.add_subcommand("height", "height H(n) under the C map");
    height_cmd->add_option("N", n_text, "positive integer")->required();
    add_json(height_cmd);

    auto* traj_cmd = app.add_subcommand("traj", "trajectory of n down to 1");
    traj_cmd->add_option("N", n_text)->required();
    traj_cmd->add_option("--map", map_text, "c or t")->check(CLI::IsMember({"c", "t", "C", "T"}));
    add_json(traj_cmd);

    auto* parity_cmd = app.add_subcommand("parity", "full-trajectory parity vector");
    parity_cmd->add_option("N", n_text)->required();
    parity_cmd->add_option("--map", map_text, "c or t")->check(CLI::IsMember({"c", "t", "C", "T"}));
    add_json(parity_cmd);

    auto* pair_cmd = app.add_subcommand("pair", "analyze the consecutive pair (n, n+1)");
    pair_cmd->add_option("N", n_text)->required();
    add_json(pair_cmd);

    auto* stems_cmd = app.add_subcommand("stems", "Garner stem pair s_i, s_i'");
    stems_cmd->add_option("--i", stem_i, "stem index")->required();
    add_json(stems_cmd);

    auto* check_cmd = app.add_subcommand("check-stems", "run the stem and block-prefix deciders on two vectors");
    check_cmd->add_option("V1", v1_text, "bit string, e.g. 001")->required();
    check_cmd->add_option("V2", v2_text, "bit string, e.g. 100")->required();
    check_cmd->add_option("--map", stem_map_text, "map of the given vectors (C vectors are compressed)")
        ->check(CLI::IsMember({"c", "t", "C", "T"}));
    check_cmd->add_flag("--all-integers", all_integers, "quantify prefix conditions over all integers");
    add_json(check_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "census of same-height pairs over [from, to)");
    scan_cmd->add_option("--from", from_text, "first n (default 2)");
    scan_cmd->add_option("--to", to_text, "one past the last n")->required();
    scan_cmd->add_flag("--csv", csv, "per-pair rows as CSV");
    scan_cmd->add_option("--out", out_path, "write per-pair rows here (CSV, or JSON lines with --json)");
    scan_cmd->add_option("--checkpoint", checkpoint_path, "resumable progress file (JSON)");
    add_jobs(scan_cmd);
    add_json(scan_cmd);

    auto* first_cmd = app.add_subcommand("first-counterexample", "smallest counterexample below --limit");
    first_cmd->add_option("--limit", limit_text)->required();
    add_json(first_cmd);

    auto* family_cmd = app.add_subcommand("family", "verify the family 2^e m + base");
    family_cmd->add_option("--base", base_text, "base pair (default 3067)");
    family_cmd->add_option("--modulus-exp", modulus_exp, "e (default 19)")->check(CLI::Range(1u, 120u));
    family_cmd->add_option("--count", count_text, "number of m values (default 100)");
    add_json(family_cmd);

    auto* ratio_cmd = app.add_subcommand("ratio", "counterexamples / same-height pairs over [2, limit)");
    ratio_cmd->add_option("--limit", limit_text)->required();
    ratio_cmd->add_option("--checkpoint", checkpoint_path, "resumable progress file (JSON)");
    add_jobs(ratio_cmd);
    add_json(ratio_cmd);

    auto* emit_cmd = app.add_subcommand("emit-heights", "plot-ready n,height rows for n < limit");
    emit_cmd->add_option("--limit", limit_text)->required();
    emit_cmd->add_option("--out", out_path, "output CSV (default stdout)");

    auto* verify_cmd = app.add_subcommand("verify-paper", "check every published claim");
    verify_cmd->add_flag("--extended", extended, "include the 5e9 ratio census (hours)");
    add_jobs(verify_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return ok;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (height_cmd->parsed()) {
            const u128 n = positive(n_text, "N");
            const auto h = height(n);
            if (json)
                out << nlohmann::json{{"n", u128_to_json(n)}, {"height", h}}.dump() << '\n';
            else
                out << h << '\n';
        } else if (traj_cmd->parsed() || parity_cmd->parsed()) {
            const u128 n = positive(n_text, "N");
            const MapKind map = parse_map_kind(map_text);
            if (traj_cmd->parsed()) {
                const Trajectory t = trajectory(n, map);
                if (json)
                    out << nlohmann::json{{"n", u128_to_json(n)}, {"map", to_string(map)}, {"values", values_json(t.values())}}
                               .dump()
                        << '\n';
                else
                    out << joined(t.values(), " -> ") << '\n';
            } else {
                const ParityVector v = parity_vector(n, map);
                if (json)
                    out << nlohmann::json{{"n", u128_to_json(n)}, {"vector", v.tagged()}}.dump() << '\n';
                else
                    out << v.tagged() << '\n';
            }
        } else if (pair_cmd->parsed()) {
            const PairAnalysis p = analyze_pair(positive(n_text, "N"));
            if (json)
                out << to_json(p).dump(2) << '\n';
            else
                print_pair(p, out);
        } else if (stems_cmd->parsed()) {
            const StemPair s = garner_stem(stem_i);
            if (json)
                out << nlohmann::json{{"i", stem_i}, {"s", s.s.tagged()}, {"s_prime", s.s_prime.tagged()}}.dump() << '\n';
            else
                out << "s_" << stem_i << "  = " << s.s.tagged() << "\ns_" << stem_i << "' = " << s.s_prime.tagged()
                    << '\n';
        } else if (check_cmd->parsed()) {
            const MapKind map = parse_map_kind(stem_map_text);
            ParityVector v1 = ParityVector::parse(v1_text, map);
            ParityVector v2 = ParityVector::parse(v2_text, map);
            if (v1.map() == MapKind::C) v1 = compress_c_to_t(v1);
            if (v2.map() == MapKind::C) v2 = compress_c_to_t(v2);
            if (v1.size() != v2.size())
                throw UsageError("vectors must have equal T-length (" + std::to_string(v1.size()) + " vs " +
                                 std::to_string(v2.size()) + ")");
            const StemVerdict verdict = is_corresponding_stem_pair(
                v1, v2, all_integers ? StemDomain::all_integers : StemDomain::positive);
            const bool block = is_block_prefix(v1, v2);
            const SolutionSet eq = v1.empty() ? SolutionSet::none() : decide_all_x(v1, v2, 0);
            if (json) {
                nlohmann::json j{{"v", v1.tagged()},
                                 {"v_prime", v2.tagged()},
                                 {"corresponding_stems", verdict.holds()},
                                 {"equality_holds", verdict.equality_holds},
                                 {"equality_solutions", solution_json(eq)},
                                 {"violated_prefix_length", nullptr},
                                 {"witness_x", nullptr},
                                 {"witness_target", nullptr},
                                 {"block_prefix", block}};
                if (verdict.violated_prefix_length) j["violated_prefix_length"] = *verdict.violated_prefix_length;
                if (verdict.witness_x) j["witness_x"] = verdict.witness_x->str();
                if (verdict.witness_target) j["witness_target"] = *verdict.witness_target;
                out << j.dump(2) << '\n';
            } else {
                out << "vectors              " << v1.tagged() << "  " << v2.tagged() << '\n'
                    << "T_v(x) = T_v'(x+1)   " << solution_text(eq) << '\n'
                    << "corresponding stems  " << (verdict.holds() ? "yes" : "no") << '\n';
                if (verdict.violated_prefix_length) {
                    out << "  violated at prefix " << *verdict.violated_prefix_length << " (difference "
                        << *verdict.witness_target << ")";
                    if (verdict.witness_x) out << ", witness x = " << verdict.witness_x->str();
                    out << '\n';
                }
                out << "block prefix         " << (block ? "yes" : "no") << '\n';
            }
        } else if (scan_cmd->parsed()) {
            const std::uint64_t from = positive64(from_text, "--from");
            const std::uint64_t to = positive64(to_text, "--to");
            if (from >= to) throw UsageError("--from must be below --to");
            ScanOptions opts;
            opts.workers = jobs;
            if (!checkpoint_path.empty()) opts.checkpoint = checkpoint_path;
            std::ofstream rows_file;
            std::ostream* rows = nullptr;
            if (!out_path.empty()) {
                rows_file = open_out(out_path);
                rows = &rows_file;
            } else if (csv) {
                rows = &out;
            }
            const bool rows_csv = csv || !json;
            if (rows) {
                if (rows_csv) *rows << pair_csv_header << '\n';
                opts.on_pair = [rows, rows_csv](const PairRow& row) {
                    if (rows_csv)
                        *rows << to_csv_line(row) << '\n';
                    else
                        *rows << to_json(row).dump() << '\n';
                };
            }
            const ScanReport r = scan_range(from, to, opts);
            if (rows_file.is_open()) {
                rows_file.flush();
                if (!rows_file) throw Error("failed writing '" + out_path + "'");
            }
            if (rows == &out) return ok;
            if (json)
                out << to_json(r).dump(2) << '\n';
            else
                print_report(r, out);
        } else if (first_cmd->parsed()) {
            const std::uint64_t limit = positive64(limit_text, "--limit");
            if (limit < 2) throw UsageError("--limit must be at least 2");
            const auto first = first_counterexample(limit);
            if (json)
                out << nlohmann::json{{"limit", limit}, {"first", first ? nlohmann::json(*first) : nlohmann::json()}}
                           .dump()
                    << '\n';
            else
                out << (first ? std::to_string(*first) : "none") << '\n';
        } else if (family_cmd->parsed()) {
            const FamilyReport f =
                verify_family(positive(base_text, "--base"), modulus_exp, positive64(count_text, "--count"));
            if (json) {
                out << to_json(f).dump(2) << '\n';
            } else {
                out << "family             2^" << f.modulus_exponent << " m + " << to_string(f.base) << ", m < "
                    << f.checked << '\n'
                    << "all_same_height    " << (f.all_same_height ? "yes" : "no") << '\n'
                    << "all_counterexamples " << (f.all_counterexamples ? "yes" : "no") << '\n'
                    << "all_prefix_agree   " << (f.all_prefix_agree ? "yes" : "no") << '\n'
                    << "failures           " << f.failures.size() << '\n';
            }
        } else if (ratio_cmd->parsed()) {
            const std::uint64_t limit = positive64(limit_text, "--limit");
            if (limit < 2) throw UsageError("--limit must be at least 2");
            ScanOptions opts;
            opts.workers = jobs;
            if (!checkpoint_path.empty()) opts.checkpoint = checkpoint_path;
            const Ratio r = counterexample_ratio(limit, opts);
            if (json)
                out << nlohmann::json{{"limit", limit},
                                      {"counterexamples", r.counterexamples},
                                      {"same_height_pairs", r.same_height_pairs},
                                      {"ratio", r.value()}}
                           .dump()
                    << '\n';
            else
                out << r.counterexamples << " / " << r.same_height_pairs << " = " << std::setprecision(6) << r.value()
                    << '\n';
        } else if (emit_cmd->parsed()) {
            const std::uint64_t limit = positive64(limit_text, "--limit");
            if (out_path.empty()) {
                emit_heights(limit, out);
            } else {
                std::ofstream f = open_out(out_path);
                emit_heights(limit, f);
            }
        } else if (verify_cmd->parsed()) {
            ClaimOptions opts;
            opts.workers = jobs;
            opts.extended = extended;
            return run_claims(published_claims(opts), out) ? ok : claim_mismatch;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const PreconditionError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const StructureError& e) {
        err << "usage error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    }
    return ok;
}

}  // namespace collatz::cli
