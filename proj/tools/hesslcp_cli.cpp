// hesslcp: command-line front end for the Hessenberg LCP solver.
//
//   hesslcp solve    <instance.json> [--fallback-limit N] [--report-prefix-bases] [--format text|json]
//   hesslcp classify <instance.json> [--check-p] [--check-nondegenerate] [--format text|json]
//   hesslcp digraph  <instance.json> [--mode lex|plain] [--dot-out FILE] [--find-cycle] [--check-cycle FILE]
//   hesslcp bench    [--n-range A..B] [--structure S] [--instances-per-n K] [--seed S] [--csv FILE]
//   hesslcp gen      --n N [--structure S] [--seed S] [--family F] [--out FILE]
//
// Exit codes: 0 ok, 1 internal error, 2 parse/usage error, 3 unsupported
// structure or size, 4 no optimal basis (input is not a P-matrix),
// 5 malformed cycle.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hesslcp/hesslcp.hpp"

namespace {

using namespace hesslcp;

enum ExitCode : int { kOk = 0, kInternal = 1, kParse = 2, kUnsupported = 3, kNoSolution = 4, kMalformedCycle = 5 };

int run_guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const NotSquare& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const DimensionMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kParse;
    } catch (const Unsupported& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUnsupported;
    } catch (const NoCandidatePassed& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNoSolution;
    } catch (const NoOptimalBasis& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNoSolution;
    } catch (const MalformedCycle& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kMalformedCycle;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

// --- solve -----------------------------------------------------------------

struct SolveOptions {
    std::string path;
    std::size_t fallback_limit = kDefaultFallbackLimit;
    bool prefix_bases = false;
    std::string format = "text";
};

int cmd_solve(const SolveOptions& o) {
    const InstanceFile file = load_instance(o.path);
    const LCPInstance inst = file.instance();
    const SolveReport r = solve(inst, o.fallback_limit);
    if (!verify_solution(inst, r.pair)) throw Error("solution failed re-verification");
    if (o.format == "json") std::cout << report_json(r, inst.size(), o.prefix_bases).dump(2) << '\n';
    else std::cout << report_text(r, inst.size(), o.prefix_bases);
    return kOk;
}

// --- classify --------------------------------------------------------------

struct ClassifyOptions {
    std::string path;
    bool check_p = false;
    bool check_nondegenerate = false;
    std::string format = "text";
};

int cmd_classify(const ClassifyOptions& o) {
    const InstanceFile file = load_instance(o.path);
    const StructureProfile p = classify(file.matrix);
    nlohmann::json j = profile_json(p);
    j["z_matrix"] = is_z_matrix(file.matrix);
    if (o.check_p) j["p_matrix"] = is_p_matrix(file.matrix);
    if (o.check_nondegenerate) j["nondegenerate"] = is_nondegenerate(file.instance());
    if (o.format == "json") {
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << "tridiagonal: " << yes_no(p.is_tridiagonal) << '\n'
              << "lower-hessenberg: " << yes_no(p.is_lower_hessenberg) << '\n'
              << "upper-hessenberg: " << yes_no(p.is_upper_hessenberg) << '\n'
              << "bandwidth: " << p.bandwidth << '\n'
              << "left-half-bandwidth: " << p.left_half_bandwidth << '\n'
              << "right-half-bandwidth: " << p.right_half_bandwidth << '\n'
              << "z-matrix: " << yes_no(j["z_matrix"].get<bool>()) << '\n';
    if (o.check_p) std::cout << "p-matrix: " << yes_no(j["p_matrix"].get<bool>()) << '\n';
    if (o.check_nondegenerate) std::cout << "nondegenerate: " << yes_no(j["nondegenerate"].get<bool>()) << '\n';
    return kOk;
}

// --- digraph ---------------------------------------------------------------

struct DigraphOptions {
    std::string path;
    std::string mode = "lex";
    std::string dot_out;
    bool find_cycle = false;
    std::string check_cycle;
};

std::string cycle_text(const std::vector<Basis>& cycle) {
    std::string s;
    for (std::size_t i = 0; i < cycle.size(); ++i) s += (i ? " -> " : "") + cycle[i].to_string();
    return s;
}

int cmd_digraph(const DigraphOptions& o) {
    const InstanceFile file = load_instance(o.path);
    const OrientationMode mode = o.mode == "plain" ? OrientationMode::plain : OrientationMode::lex;
    const OrientationDigraph g = build_digraph(file.instance(), mode);

    std::cout << "mode: " << to_string(mode) << '\n'
              << "vertices: " << g.vertex_count() << '\n'
              << "arcs: " << g.arc_count() << '\n';
    const auto sinks = find_sinks(g);
    std::cout << "sinks:";
    for (const Basis& b : sinks) std::cout << ' ' << b;
    std::cout << '\n';

    if (!o.dot_out.empty()) {
        std::ofstream out(o.dot_out);
        if (!out) throw ParseError("cannot write '" + o.dot_out + "'");
        out << to_dot(g, file.name.empty() ? "orientation" : file.name);
        std::cout << "dot: " << o.dot_out << '\n';
    }
    if (o.find_cycle) {
        const auto cycle = find_cycle(g);
        if (cycle) std::cout << "cycle: " << cycle_text(*cycle) << '\n';
        else std::cout << "acyclic\n";
    }
    if (!o.check_cycle.empty()) {
        const std::vector<Basis> cycle = parse_cycle(read_file(o.check_cycle));
        std::cout << "cycle present: " << yes_no(contains_cycle(g, cycle)) << '\n';
    }
    return kOk;
}

// --- bench -----------------------------------------------------------------

struct BenchOptions {
    std::string n_range = "1..8";
    std::string structure = "tridiagonal";
    std::size_t per_n = 50;
    std::uint64_t seed = 1;
    std::size_t oracle_limit = 12;
    std::string csv;
};

struct BenchRow {
    std::size_t n = 0;
    std::size_t instances = 0;
    std::size_t max_tests = 0;
    double mean_tests = 0;
    std::size_t bound = 0;
    std::size_t bound_violations = 0;
    std::optional<double> agreement;
    double dp_ms = 0;
    double oracle_ms = 0;
    std::size_t failures = 0;
};

std::pair<std::size_t, std::size_t> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const std::size_t v = std::stoul(s);
            return {v, v};
        }
        return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw ParseError("--n-range must look like A..B, got '" + s + "'");
    }
}

int cmd_bench(const BenchOptions& o) {
    const auto structure = parse_band_structure(o.structure);
    if (!structure) throw ParseError("unknown structure '" + o.structure + "'");
    const auto [lo, hi] = parse_range(o.n_range);
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };

    std::vector<BenchRow> rows;
    for (std::size_t n = std::max<std::size_t>(lo, 1); n <= hi; ++n) {
        BenchRow row;
        row.n = n;
        row.bound = basis_test_bound(n);
        std::size_t agree = 0;
        std::size_t compared = 0;
        std::size_t total_tests = 0;
        for (std::size_t i = 0; i < o.per_n; ++i) {
            try {
                const LCPInstance inst = generate_instance({n, *structure, o.seed * 1000003ULL + n * 1009ULL + i, Family::automatic});
                auto t0 = clock::now();
                const SolveReport r = solve(inst);
                row.dp_ms += ms(clock::now() - t0);
                ++row.instances;
                total_tests += r.basis_test_count;
                row.max_tests = std::max(row.max_tests, r.basis_test_count);
                if (r.structure != Route::general && r.basis_test_count > row.bound) ++row.bound_violations;
                if (n <= o.oracle_limit) {
                    t0 = clock::now();
                    const EnumerationResult e = brute_force_solve(inst);
                    row.oracle_ms += ms(clock::now() - t0);
                    ++compared;
                    if (e.lex_optimal_basis == r.optimal_basis && verify_solution(inst, r.pair)) ++agree;
                }
            } catch (const Error& e) {
                ++row.failures;
                std::cerr << "n = " << n << ", instance " << i << ": " << e.what() << '\n';
            }
        }
        if (row.instances) row.mean_tests = static_cast<double>(total_tests) / static_cast<double>(row.instances);
        if (compared) row.agreement = 100.0 * static_cast<double>(agree) / static_cast<double>(compared);
        rows.push_back(row);
    }

    std::cout << std::left << std::setw(4) << "n" << std::setw(10) << "instances" << std::setw(10) << "max_tests" << std::setw(11) << "mean_tests"
              << std::setw(7) << "bound" << std::setw(11) << "violations" << std::setw(11) << "agreement" << std::setw(11) << "dp_ms"
              << std::setw(11) << "oracle_ms" << "failures\n";
    for (const BenchRow& r : rows) {
        std::ostringstream agreement;
        if (r.agreement) agreement << std::fixed << std::setprecision(1) << *r.agreement << '%';
        else agreement << '-';
        std::cout << std::left << std::setw(4) << r.n << std::setw(10) << r.instances << std::setw(10) << r.max_tests << std::setw(11)
                  << std::fixed << std::setprecision(2) << r.mean_tests << std::setw(7) << r.bound << std::setw(11) << r.bound_violations
                  << std::setw(11) << agreement.str() << std::setw(11) << std::setprecision(1) << r.dp_ms << std::setw(11) << r.oracle_ms
                  << r.failures << '\n';
    }

    if (!o.csv.empty()) {
        std::ofstream out(o.csv);
        if (!out) throw ParseError("cannot write '" + o.csv + "'");
        out << "n,instances,max_tests,mean_tests,bound,violations,agreement_percent,dp_ms,oracle_ms,failures\n";
        for (const BenchRow& r : rows) {
            out << r.n << ',' << r.instances << ',' << r.max_tests << ',' << r.mean_tests << ',' << r.bound << ',' << r.bound_violations << ',';
            if (r.agreement) out << *r.agreement;
            out << ',' << r.dp_ms << ',' << r.oracle_ms << ',' << r.failures << '\n';
        }
    }
    return kOk;
}

// --- gen -------------------------------------------------------------------

struct GenOptions {
    std::size_t n = 4;
    std::string structure = "tridiagonal";
    std::uint64_t seed = 1;
    std::string family = "automatic";
    std::string out;
};

int cmd_gen(const GenOptions& o) {
    const auto structure = parse_band_structure(o.structure);
    if (!structure) throw ParseError("unknown structure '" + o.structure + "'");
    const auto family = parse_family(o.family);
    if (!family) throw ParseError("unknown family '" + o.family + "'");
    const LCPInstance inst = generate_instance({o.n, *structure, o.seed, *family});
    InstanceFile f{"generated " + std::string(to_string(*structure)) + " n=" + std::to_string(o.n) + " seed=" + std::to_string(o.seed),
                   inst.matrix(), inst.rhs()};
    const std::string text = format_instance(f);
    if (o.out.empty() || o.out == "-") {
        std::cout << text;
        return kOk;
    }
    std::ofstream out(o.out, std::ios::binary);
    if (!out || !(out << text) || !out.flush()) throw ParseError("cannot write '" + o.out + "'");
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact LCP solver for Hessenberg and tridiagonal P-matrices"};
    app.require_subcommand(1);

    SolveOptions solve_opts;
    auto* solve_cmd = app.add_subcommand("solve", "Solve LCP(M, q) from an instance file");
    solve_cmd->add_option("path", solve_opts.path, "Instance file")->required();
    solve_cmd->add_option("--fallback-limit", solve_opts.fallback_limit, "Largest n solved by enumeration when M is not Hessenberg");
    solve_cmd->add_flag("--report-prefix-bases", solve_opts.prefix_bases, "Also print B(1), ..., B(n)");
    solve_cmd->add_option("--format", solve_opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    solve_cmd->add_flag_callback("--json", [&] { solve_opts.format = "json"; }, "Same as --format json");

    ClassifyOptions classify_opts;
    auto* classify_cmd = app.add_subcommand("classify", "Report band structure and matrix classes");
    classify_cmd->add_option("path", classify_opts.path, "Instance file")->required();
    classify_cmd->add_flag("--check-p", classify_opts.check_p, "Exhaustive P-matrix check (size-guarded)");
    classify_cmd->add_flag("--check-nondegenerate", classify_opts.check_nondegenerate, "Exhaustive nondegeneracy check (size-guarded)");
    classify_cmd->add_option("--format", classify_opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));

    DigraphOptions digraph_opts;
    auto* digraph_cmd = app.add_subcommand("digraph", "Build the orientation digraph on all bases");
    digraph_cmd->add_option("path", digraph_opts.path, "Instance file")->required();
    digraph_cmd->add_option("--mode", digraph_opts.mode, "Arc rule")->check(CLI::IsMember({"lex", "plain"}));
    digraph_cmd->add_option("--dot-out", digraph_opts.dot_out, "Write the digraph in DOT format");
    digraph_cmd->add_flag("--find-cycle", digraph_opts.find_cycle, "Search for a directed cycle");
    digraph_cmd->add_option("--check-cycle", digraph_opts.check_cycle, "JSON file with a vertex sequence to check");

    BenchOptions bench_opts;
    auto* bench_cmd = app.add_subcommand("bench", "Basis-test counts and oracle agreement on generated instances");
    bench_cmd->add_option("--n-range", bench_opts.n_range, "Dimensions, e.g. 1..8");
    bench_cmd->add_option("--structure", bench_opts.structure, "tridiagonal | lower-hessenberg | upper-hessenberg | general");
    bench_cmd->add_option("--instances-per-n", bench_opts.per_n, "Instances per dimension");
    bench_cmd->add_option("--seed", bench_opts.seed, "Base seed");
    bench_cmd->add_option("--oracle-limit", bench_opts.oracle_limit, "Largest n compared against enumeration");
    bench_cmd->add_option("--csv", bench_opts.csv, "Also write the table as CSV");

    GenOptions gen_opts;
    auto* gen_cmd = app.add_subcommand("gen", "Write a generated P-matrix instance");
    gen_cmd->add_option("--n", gen_opts.n, "Dimension")->required();
    gen_cmd->add_option("--structure", gen_opts.structure, "tridiagonal | lower-hessenberg | upper-hessenberg | general");
    gen_cmd->add_option("--seed", gen_opts.seed, "Seed");
    gen_cmd->add_option("--family", gen_opts.family, "automatic | dominant | skew | alternating | sampled");
    gen_cmd->add_option("--out", gen_opts.out, "Output path (stdout when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kParse;
    }

    if (*solve_cmd) return run_guarded([&] { return cmd_solve(solve_opts); });
    if (*classify_cmd) return run_guarded([&] { return cmd_classify(classify_opts); });
    if (*digraph_cmd) return run_guarded([&] { return cmd_digraph(digraph_opts); });
    if (*bench_cmd) return run_guarded([&] { return cmd_bench(bench_opts); });
    if (*gen_cmd) return run_guarded([&] { return cmd_gen(gen_opts); });
    return kParse;
}
