#ifndef HESSLCP_SOLVER_HPP
#define HESSLCP_SOLVER_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hesslcp/analysis.hpp"
#include "hesslcp/basis.hpp"
#include "hesslcp/error.hpp"
#include "hesslcp/lcp.hpp"
#include "hesslcp/limits.hpp"
#include "hesslcp/oracle.hpp"
#include "hesslcp/prefix_bases.hpp"

namespace hesslcp {

/// Which code path produced a SolveReport.
enum class Route { lower_hessenberg, upper_hessenberg, general };

inline std::string_view to_string(Route r) {
    switch (r) {
    case Route::lower_hessenberg: return "lower-hessenberg";
    case Route::upper_hessenberg: return "upper-hessenberg";
    case Route::general: return "general";
    }
    return "?";
}

struct CandidateTest {
    std::ptrdiff_t ell = 0;
    Basis candidate;
    bool tested = false;
    bool passed = false;
};

/// Everything the dynamic program did to settle B(k).
struct StageTrace {
    std::size_t k = 0;
    std::vector<CandidateTest> candidates;
    Basis chosen;
};

struct SolveReport {
    Basis optimal_basis;
    ComplementaryPair pair;
    std::size_t basis_test_count = 0;
    /// Leading-subproblem bases for the lower route. For the upper route,
    /// B(k) belongs to the trailing block {n-k+1, ..., n} and local index
    /// p stands for original index n-k+p. Empty for the general route.
    PrefixBases prefix_bases;
    Route structure = Route::general;
    std::vector<StageTrace> trace;
};

/// The k + 1 candidates B(l) u {l+2, ..., k} for l = -1, 0, ..., k-1,
/// listed in that order (1-based indices in the formula).
inline std::vector<Basis> candidates(std::size_t k, const PrefixBases& prefix) {
    if (k == 0) throw InvalidArgument("candidates: k must be at least 1");
    if (prefix.filled() + 1 < k)
        throw PrefixIncomplete("candidates for k = " + std::to_string(k) + " need B(" + std::to_string(k - 1) + "), known up to B(" + std::to_string(prefix.filled()) + ")");
    std::vector<Basis> out;
    out.reserve(k + 1);
    for (std::ptrdiff_t ell = -1; ell < static_cast<std::ptrdiff_t>(k); ++ell)
        out.push_back(prefix.at(ell).united(Basis::range(static_cast<std::size_t>(ell + 1), k)));
    return out;
}

/// Dynamic program over leading subproblems. Stage k tests candidates in
/// order l = k-1, ..., 0 and accepts the l = -1 candidate ([k]) without a
/// test when all of them fail, so stage k costs at most k basis tests.
/// M must be a lower Hessenberg P-matrix; the P property is not checked.
inline SolveReport solve_lower_hessenberg(const LCPInstance& inst) {
    const StructureProfile profile = classify(inst.matrix());
    if (!profile.is_lower_hessenberg)
        throw NotLowerHessenberg("right half-bandwidth is " + std::to_string(profile.right_half_bandwidth));

    const std::size_t n = inst.size();
    SolveReport report;
    report.structure = Route::lower_hessenberg;

    for (std::size_t k = 1; k <= n; ++k) {
        const LCPInstance sub = inst.leading(k);
        const std::vector<Basis> cands = candidates(k, report.prefix_bases);
        StageTrace stage;
        stage.k = k;
        const Basis* chosen = nullptr;
        for (std::ptrdiff_t ell = static_cast<std::ptrdiff_t>(k) - 1; ell >= 0 && chosen == nullptr; --ell) {
            const Basis& c = cands[static_cast<std::size_t>(ell + 1)];
            const bool ok = basis_test_lex(sub, c);
            ++report.basis_test_count;
            stage.candidates.push_back({ell, c, true, ok});
            if (ok) chosen = &c;
        }
        if (chosen == nullptr) {
            chosen = &cands.front();
            stage.candidates.push_back({-1, *chosen, false, true});
        }
        stage.chosen = *chosen;
        report.prefix_bases.push(*chosen);
        report.trace.push_back(std::move(stage));
    }

    report.optimal_basis = report.prefix_bases.at(static_cast<std::ptrdiff_t>(n));
    report.pair = complementary_pair(inst, report.optimal_basis);
    if (!verify_solution(inst, report.pair))
        throw NoCandidatePassed("basis " + report.optimal_basis.to_string() + " selected by the dynamic program does not solve the LCP; M is not a P-matrix");
    return report;
}

namespace detail {

inline std::size_t mirror(std::size_t i, std::size_t n) { return n - 1 - i; }

inline Basis mirror(const Basis& b, std::size_t n) {
    std::vector<std::size_t> m;
    for (std::size_t i : b.members()) m.push_back(mirror(i, n));
    return Basis(std::move(m));
}

inline Vector mirror(const Vector& v) { return Vector(v.rbegin(), v.rend()); }

/// (R M R, R q) with the perturbation carried along, R the reversal.
inline LCPInstance reversed(const LCPInstance& inst) {
    const std::size_t n = inst.size();
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = inst.matrix()(mirror(i, n), mirror(j, n));
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = inst.perturbation()[mirror(i, n)];
    return LCPInstance(std::move(m), mirror(inst.rhs()), std::move(rank));
}

} // namespace detail

/// Upper Hessenberg case via index reversal: the reversed instance is
/// lower Hessenberg, and its leading subproblems are the trailing
/// subproblems of the original.
inline SolveReport solve_upper_hessenberg(const LCPInstance& inst) {
    const StructureProfile profile = classify(inst.matrix());
    if (!profile.is_upper_hessenberg)
        throw NotUpperHessenberg("left half-bandwidth is " + std::to_string(profile.left_half_bandwidth));

    const std::size_t n = inst.size();
    SolveReport r = solve_lower_hessenberg(detail::reversed(inst));

    SolveReport report;
    report.structure = Route::upper_hessenberg;
    report.basis_test_count = r.basis_test_count;
    report.optimal_basis = detail::mirror(r.optimal_basis, n);
    report.pair = {detail::mirror(r.pair.w), detail::mirror(r.pair.z)};
    for (std::size_t k = 1; k <= n; ++k) report.prefix_bases.push(detail::mirror(r.prefix_bases.at(static_cast<std::ptrdiff_t>(k)), k));
    for (StageTrace& stage : r.trace) {
        for (CandidateTest& c : stage.candidates) c.candidate = detail::mirror(c.candidate, n);
        stage.chosen = detail::mirror(stage.chosen, n);
        report.trace.push_back(std::move(stage));
    }
    if (!verify_solution(inst, report.pair))
        throw NoCandidatePassed("reversed solve produced basis " + report.optimal_basis.to_string() + " which does not solve the original LCP");
    return report;
}

/// Dispatches on band structure: lower Hessenberg (including tridiagonal)
/// first, then upper Hessenberg, otherwise enumeration when
/// n <= fallback_limit.
inline SolveReport solve(const LCPInstance& inst, std::size_t fallback_limit = kDefaultFallbackLimit) {
    const StructureProfile profile = classify(inst.matrix());
    if (profile.is_lower_hessenberg) return solve_lower_hessenberg(inst);
    if (profile.is_upper_hessenberg) return solve_upper_hessenberg(inst);

    const std::size_t n = inst.size();
    if (n > fallback_limit)
        throw Unsupported("matrix is neither lower nor upper Hessenberg and n = " + std::to_string(n) + " exceeds the enumeration fallback limit " + std::to_string(fallback_limit));
    const EnumerationResult e = brute_force_solve(inst, fallback_limit);
    SolveReport report;
    report.structure = Route::general;
    report.optimal_basis = e.lex_optimal_basis;
    report.basis_test_count = e.tested_count;
    report.pair = complementary_pair(inst, e.lex_optimal_basis);
    if (!verify_solution(inst, report.pair))
        throw Error("internal: enumerated basis " + e.lex_optimal_basis.to_string() + " fails verification");
    return report;
}

} // namespace hesslcp

#endif // HESSLCP_SOLVER_HPP
