// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "hesslcp/hesslcp.hpp"
#include "test_support.hpp"

namespace {

using namespace hesslcp;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> body;
};

std::size_t n_for(std::size_t i, std::size_t lo, std::size_t hi) { return lo + i % (hi - lo + 1); }

template <class... Args>
std::string fmt(const char* f, Args... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

LCPInstance shipped() { return load_instance(testing::data_path("tridiagonal_cyclic_4x4.json")).instance(); }

// Filled by criterion 3, reported by criterion 8.
std::map<std::size_t, std::size_t> g_max_tests;

Outcome shipped_instance_classes() {
    const LCPInstance inst = shipped();
    const StructureProfile p = classify(inst.matrix());
    std::size_t positive = 0;
    for (std::uint64_t mask = 1; mask < 16; ++mask) {
        IndexSet k;
        for (std::size_t i = 0; i < 4; ++i)
            if (mask >> i & 1U) k.push_back(i);
        positive += determinant(principal_submatrix(inst.matrix(), k)) > 0;
    }
    const bool ok = p.is_tridiagonal && p.is_lower_hessenberg && p.is_upper_hessenberg && is_p_matrix(inst.matrix()) && positive == 15 &&
                    !is_z_matrix(inst.matrix());
    return {ok, fmt("tridiagonal=%d positive minors=%zu/15 z-matrix=%d", p.is_tridiagonal, positive, is_z_matrix(inst.matrix()))};
}

Outcome shipped_instance_cycle() {
    const OrientationDigraph g = build_digraph(shipped());
    const auto cycle = parse_cycle(read_file(testing::data_path("tridiagonal_cyclic_4x4.cycle.json")));
    const bool present = contains_cycle(g, cycle);
    return {present && cycle.size() == 9, fmt("8-step cycle present=%d", present)};
}

Outcome test_budget() {
    const SolveReport shipped_report = solve_lower_hessenberg(shipped());
    std::size_t violations = 0;
    for (std::size_t i = 0; i < 500; ++i) {
        const std::size_t n = n_for(i, 1, 12);
        const LCPInstance inst = generate_instance({n, BandStructure::lower_hessenberg, 30000 + i});
        const SolveReport r = solve_lower_hessenberg(inst);
        violations += r.basis_test_count > n * (n + 1) / 2;
        auto& m = g_max_tests[n];
        m = std::max(m, r.basis_test_count);
    }
    return {shipped_report.basis_test_count <= 10 && violations == 0,
            fmt("shipped instance %zu tests (bound 10); 500 instances, %zu violations", shipped_report.basis_test_count, violations)};
}

Outcome oracle_equivalence() {
    std::size_t agree = 0;
    std::size_t total = 0;
    for (BandStructure s : {BandStructure::tridiagonal, BandStructure::lower_hessenberg}) {
        for (std::size_t i = 0; i < 200; ++i) {
            const std::size_t n = n_for(i, 1, 10);
            const LCPInstance inst = generate_instance({n, s, 40000 + 1000 * static_cast<std::uint64_t>(s) + i});
            const SolveReport r = solve_lower_hessenberg(inst);
            agree += r.optimal_basis == brute_force_solve(inst).lex_optimal_basis && verify_solution(inst, r.pair);
            ++total;
        }
    }
    return {agree == total, fmt("%zu/%zu agree and verify", agree, total)};
}

Outcome prefix_structure() {
    std::size_t good = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = n_for(i, 2, 8);
        const PrefixBases pb = prefix_bases_brute(generate_instance({n, BandStructure::lower_hessenberg, 50000 + i}));
        bool all = true;
        for (std::size_t k = 1; k <= n; ++k) {
            const Basis& bk = pb.at(static_cast<std::ptrdiff_t>(k));
            bool some = false;
            for (std::ptrdiff_t ell = -1; ell < static_cast<std::ptrdiff_t>(k); ++ell)
                some = some || bk == pb.at(ell).united(Basis::range(static_cast<std::size_t>(ell + 1), k));
            all = all && some;
        }
        good += all;
    }
    return {good == 100, fmt("%zu/100 instances match the prefix pattern at every k", good)};
}

Outcome unique_sink() {
    std::size_t good = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = n_for(i, 1, 8);
        const LCPInstance inst = generate_instance({n, static_cast<BandStructure>(i % 4), 60000 + i});
        const OrientationDigraph g = build_digraph(inst);
        const auto sinks = find_sinks(g);
        good += sinks.size() == 1 && sinks.front() == brute_force_solve(inst).lex_optimal_basis && g.arc_count() == n * (std::size_t{1} << (n - 1));
    }
    return {good == 100, fmt("%zu/100 with one sink at the oracle basis and n*2^(n-1) arcs", good)};
}

Outcome upper_reduction() {
    std::size_t good = 0;
    for (std::size_t i = 0; i < 100; ++i) {
        const std::size_t n = n_for(i, 1, 8);
        const LCPInstance inst = generate_instance({n, BandStructure::upper_hessenberg, 70000 + i});
        const SolveReport r = solve_upper_hessenberg(inst);
        good += verify_solution(inst, r.pair) && r.optimal_basis == brute_force_solve(inst).lex_optimal_basis;
    }
    return {good == 100, fmt("%zu/100 verify and match the oracle", good)};
}

Outcome growth_report() {
    std::ostringstream os;
    os << "max basis tests by n:";
    bool within = !g_max_tests.empty();
    for (const auto& [n, t] : g_max_tests) {
        os << ' ' << n << ':' << t << '/' << n * (n + 1) / 2;
        within = within && t <= n * (n + 1) / 2;
    }
    os << " (no timing assertion)";
    return {within, os.str()};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "shipped instance is tridiagonal, P, not Z", 1, shipped_instance_classes},
        {2, "shipped instance digraph contains the 8-step cycle", 1, shipped_instance_cycle},
        {3, "lower-Hessenberg DP stays within n(n+1)/2 basis tests", 30, test_budget},
        {4, "DP basis equals brute-force lex-optimal basis", 60, oracle_equivalence},
        {5, "prefix bases follow B(l) + {l+2..k}", 60, prefix_structure},
        {6, "lex digraph has a unique sink at the optimal basis", 60, unique_sink},
        {7, "upper-Hessenberg reduction verifies and matches", 30, upper_reduction},
        {8, "basis-test growth report", 1, growth_report},
    };
    int failures = 0;
    for (const Criterion& c : criteria) {
        Outcome o;
        const auto start = Clock::now();
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = secs < c.limit_s;
        const bool pass = o.ok && in_time;
        failures += !pass;
        std::printf("%s criterion %d: %s -- %s [%.2fs, limit %.0fs%s]\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs, c.limit_s,
                    in_time ? "" : ", too slow");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
