#ifndef HESSLCP_ORACLE_HPP
#define HESSLCP_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hesslcp/analysis.hpp"
#include "hesslcp/basis.hpp"
#include "hesslcp/error.hpp"
#include "hesslcp/lcp.hpp"
#include "hesslcp/limits.hpp"
#include "hesslcp/matrix.hpp"
#include "hesslcp/prefix_bases.hpp"

namespace hesslcp {

// ---------------------------------------------------------------------------
// Brute-force reference solver
// ---------------------------------------------------------------------------

struct EnumerationResult {
    /// Bases passing the plain test, in ascending mask order.
    std::vector<Basis> optimal_bases;
    /// First basis (ascending mask) passing the perturbed test.
    Basis lex_optimal_basis;
    /// Number of bases passing the perturbed test; 1 for every P-matrix.
    std::size_t lex_optimal_count = 0;
    std::size_t tested_count = 0;
};

/// Visits all 2^n bases in ascending mask order.
inline EnumerationResult brute_force_solve(const LCPInstance& inst, std::size_t limit = enumeration_limit()) {
    const std::size_t n = inst.size();
    check_size(n, limit, "brute_force_solve");
    EnumerationResult r;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const Basis b = Basis::from_mask(mask);
        const Vector x = basic_solution(inst, b);
        ++r.tested_count;
        if (std::all_of(x.begin(), x.end(), [](const Scalar& v) { return v >= 0; })) r.optimal_bases.push_back(b);
        if (basis_test_lex(inst, b, x)) {
            if (r.lex_optimal_count == 0) r.lex_optimal_basis = b;
            ++r.lex_optimal_count;
        }
    }
    if (r.lex_optimal_count == 0) throw NoOptimalBasis("no basis passes the perturbed basis test; M is not a P-matrix");
    return r;
}

/// B(k) for every leading subproblem, each found by enumeration.
inline PrefixBases prefix_bases_brute(const LCPInstance& inst, std::size_t limit = enumeration_limit()) {
    check_size(inst.size(), limit, "prefix_bases_brute");
    PrefixBases pb;
    for (std::size_t k = 1; k <= inst.size(); ++k) pb.push(brute_force_solve(inst.leading(k), limit).lex_optimal_basis);
    return pb;
}

// ---------------------------------------------------------------------------
// Instance generation
// ---------------------------------------------------------------------------

enum class BandStructure { tridiagonal, lower_hessenberg, upper_hessenberg, general };

/// P-matrix families. Every family except `sampled` is P by construction:
///   dominant     strictly row diagonally dominant, positive diagonal
///   skew         symmetric part strictly diagonally dominant with positive
///                diagonal (so positive definite) plus a large skew part
///   alternating  tridiagonal, positive diagonal, m(i,i+1) * m(i+1,i) <= 0
///                (every continuant is positive)
///   sampled      small random integer matrix kept only if is_p_matrix
enum class Family { automatic, dominant, skew, alternating, sampled };

inline std::string_view to_string(BandStructure s) {
    switch (s) {
    case BandStructure::tridiagonal: return "tridiagonal";
    case BandStructure::lower_hessenberg: return "lower-hessenberg";
    case BandStructure::upper_hessenberg: return "upper-hessenberg";
    case BandStructure::general: return "general";
    }
    return "?";
}

inline std::optional<BandStructure> parse_band_structure(std::string_view s) {
    for (BandStructure b : {BandStructure::tridiagonal, BandStructure::lower_hessenberg, BandStructure::upper_hessenberg, BandStructure::general})
        if (to_string(b) == s) return b;
    return std::nullopt;
}

inline std::string_view to_string(Family f) {
    switch (f) {
    case Family::automatic: return "automatic";
    case Family::dominant: return "dominant";
    case Family::skew: return "skew";
    case Family::alternating: return "alternating";
    case Family::sampled: return "sampled";
    }
    return "?";
}

inline std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::automatic, Family::dominant, Family::skew, Family::alternating, Family::sampled})
        if (to_string(f) == s) return f;
    return std::nullopt;
}

struct GenerateSpec {
    std::size_t n = 1;
    BandStructure structure = BandStructure::tridiagonal;
    std::uint64_t seed = 0;
    Family family = Family::automatic;
};

namespace detail {

inline constexpr std::size_t kSampledMaxN = 5;

using Rng = std::mt19937_64;

inline long draw(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// Lower-Hessenberg-or-narrower sparsity pattern.
inline bool in_pattern(BandStructure s, std::size_t i, std::size_t j) {
    switch (s) {
    case BandStructure::tridiagonal: return i <= j + 1 && j <= i + 1;
    case BandStructure::lower_hessenberg: return j <= i + 1;
    default: return true;
    }
}

inline Matrix gen_dominant(BandStructure s, std::size_t n, Rng& rng) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        long row = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !in_pattern(s, i, j)) continue;
            const long v = draw(rng, -9, 9);
            m(i, j) = v;
            row += v < 0 ? -v : v;
        }
        m(i, i) = row + draw(rng, 1, 9);
    }
    return m;
}

inline Matrix gen_skew(BandStructure s, std::size_t n, Rng& rng) {
    Matrix m(n, n);
    // 2 * |symmetric part| per row, kept in integers.
    std::vector<long> twice_sym(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool upper = in_pattern(s, i, j);
            const bool lower = in_pattern(s, j, i);
            if (upper && lower) {
                const long sym = draw(rng, -5, 5);
                const long skew = draw(rng, -150, 150);
                m(i, j) = sym + skew;
                m(j, i) = sym - skew;
                twice_sym[i] += 2 * (sym < 0 ? -sym : sym);
                twice_sym[j] += 2 * (sym < 0 ? -sym : sym);
            } else if (upper || lower) {
                const long v = draw(rng, -10, 10);
                (upper ? m(i, j) : m(j, i)) = v;
                twice_sym[i] += v < 0 ? -v : v;
                twice_sym[j] += v < 0 ? -v : v;
            }
        }
    for (std::size_t i = 0; i < n; ++i) m(i, i) = (twice_sym[i] + 1) / 2 + draw(rng, 1, 40);
    return m;
}

inline Matrix gen_alternating(std::size_t n, Rng& rng) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = draw(rng, 1, 80);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const long a = draw(rng, 0, 200);
        const long b = draw(rng, 0, 200);
        const bool upper_negative = draw(rng, 0, 1) == 0;
        m(i, i + 1) = upper_negative ? -a : a;
        m(i + 1, i) = upper_negative ? b : -b;
    }
    return m;
}

inline Matrix gen_sampled(BandStructure s, std::size_t n, Rng& rng) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!in_pattern(s, i, j)) continue;
                m(i, j) = i == j ? draw(rng, 1, 20) : draw(rng, -20, 20);
            }
        if (is_p_matrix(m, kSampledMaxN)) return m;
    }
    throw InvalidSpec("rejection sampling found no P-matrix");
}

} // namespace detail

/// Deterministic P-matrix instance with the requested band structure and
/// integer q in [-10, 10]. Upper Hessenberg instances are transposes of
/// lower Hessenberg ones.
inline LCPInstance generate_instance(const GenerateSpec& spec) {
    if (spec.n == 0) throw InvalidSpec("n must be at least 1");
    detail::Rng rng(spec.seed);
    const bool transpose = spec.structure == BandStructure::upper_hessenberg;
    const BandStructure pattern = transpose ? BandStructure::lower_hessenberg : spec.structure;

    Family family = spec.family;
    if (family == Family::alternating && pattern != BandStructure::tridiagonal)
        throw InvalidSpec("the alternating family is tridiagonal only");
    if (family == Family::sampled && spec.n > detail::kSampledMaxN)
        throw InvalidSpec("the sampled family is limited to n <= " + std::to_string(detail::kSampledMaxN));
    if (family == Family::automatic) {
        std::vector<Family> choices{Family::skew, Family::skew, Family::dominant};
        if (pattern == BandStructure::tridiagonal) choices.push_back(Family::alternating);
        if (spec.n <= detail::kSampledMaxN) choices.push_back(Family::sampled);
        family = choices[static_cast<std::size_t>(detail::draw(rng, 0, static_cast<long>(choices.size()) - 1))];
    }

    Matrix m;
    switch (family) {
    case Family::dominant: m = detail::gen_dominant(pattern, spec.n, rng); break;
    case Family::skew: m = detail::gen_skew(pattern, spec.n, rng); break;
    case Family::alternating: m = detail::gen_alternating(spec.n, rng); break;
    case Family::sampled: m = detail::gen_sampled(pattern, spec.n, rng); break;
    case Family::automatic: break;
    }
    if (transpose) m = m.transpose();

    Vector q(spec.n);
    for (auto& v : q) v = detail::draw(rng, -10, 10);
    return LCPInstance(std::move(m), std::move(q));
}

} // namespace hesslcp

#endif // HESSLCP_ORACLE_HPP
