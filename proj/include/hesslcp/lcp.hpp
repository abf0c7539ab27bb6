#ifndef HESSLCP_LCP_HPP
#define HESSLCP_LCP_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hesslcp/basis.hpp"
#include "hesslcp/error.hpp"
#include "hesslcp/matrix.hpp"
#include "hesslcp/rational.hpp"

namespace hesslcp {

/// LCP(M, q): find w, z >= 0 with w - M z = q and w^T z = 0.
///
/// Every instance also carries the symbolic perturbation used to make it
/// nondegenerate: q(eps) = q + (eps^{r_1}, ..., eps^{r_n}) where
/// r = perturbation() is a permutation of 0..n-1 (rank 0 is the
/// largest power of eps, i.e. eps^1). The default is the identity, which
/// gives q + (eps^1, ..., eps^n). Principal subinstances inherit the
/// restricted perturbation.
class LCPInstance {
public:
    LCPInstance(Matrix m, Vector q) : LCPInstance(std::move(m), std::move(q), {}) {}

    LCPInstance(Matrix m, Vector q, std::vector<std::size_t> perturbation)
        : m_(std::move(m)), q_(std::move(q)), rank_(std::move(perturbation)) {
        if (!m_.square()) throw NotSquare("LCP matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
        if (m_.rows() != q_.size())
            throw DimensionMismatch("matrix is " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) + " but q has length " + std::to_string(q_.size()));
        if (rank_.empty()) {
            rank_.resize(q_.size());
            std::iota(rank_.begin(), rank_.end(), std::size_t{0});
        }
        std::vector<std::size_t> sorted = rank_;
        std::sort(sorted.begin(), sorted.end());
        bool permutation = sorted.size() == q_.size();
        for (std::size_t i = 0; permutation && i < sorted.size(); ++i) permutation = sorted[i] == i;
        if (!permutation) throw InvalidArgument("perturbation order must be a permutation of 0..n-1");
    }

    const Matrix& matrix() const noexcept { return m_; }
    const Vector& rhs() const noexcept { return q_; }
    std::size_t size() const noexcept { return q_.size(); }
    std::span<const std::size_t> perturbation() const noexcept { return rank_; }

    /// LCP(M_KK, q_K) with the inherited perturbation.
    LCPInstance principal(std::span<const std::size_t> k) const {
        Matrix mk = principal_submatrix(m_, k);
        Vector qk = subvector(q_, k);
        std::vector<std::size_t> order(k.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank_[k[a]] < rank_[k[b]]; });
        std::vector<std::size_t> rank(k.size());
        for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
        return LCPInstance(std::move(mk), std::move(qk), std::move(rank));
    }

    /// LCP(M_[k][k], q_[k]).
    LCPInstance leading(std::size_t k) const {
        IndexSet idx = hesslcp::leading(k);
        return principal(idx);
    }

private:
    Matrix m_;
    Vector q_;
    std::vector<std::size_t> rank_;
};

/// Complementary pair (w(B), z(B)).
struct ComplementaryPair {
    Vector w;
    Vector z;
};

/// One coordinate of the perturbed basic solution, as coefficients of
/// eps^0, eps^1, ..., eps^n in that order.
struct LexVector {
    std::vector<Scalar> coefficients;
};

enum class LexSign { negative = -1, positive = 1 };

/// Column i is -M_{.i} for i in B, e_i otherwise.
inline Matrix basis_matrix(const Matrix& m, const Basis& b) {
    if (!m.square()) throw NotSquare("basis_matrix");
    const std::size_t n = m.rows();
    if (b.bound() > n) throw IndexOutOfRange("basis " + b.to_string() + " is not a subset of [" + std::to_string(n) + "]");
    Matrix mb = Matrix::identity(n);
    for (std::size_t j : b.members())
        for (std::size_t i = 0; i < n; ++i) mb(i, j) = -m(i, j);
    return mb;
}

/// x = M_B^{-1} q, the basic solution of B.
inline Vector basic_solution(const LCPInstance& inst, const Basis& b) {
    return gauss_solve(basis_matrix(inst.matrix(), b), inst.rhs());
}

/// w - M z residual; zero exactly when the first LCP condition holds.
inline Vector residual(const LCPInstance& inst, const Vector& w, const Vector& z) {
    Vector r = inst.matrix() * z;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = w[i] - r[i] - inst.rhs()[i];
    return r;
}

inline ComplementaryPair complementary_pair(const LCPInstance& inst, const Basis& b) {
    const Vector x = basic_solution(inst, b);
    const std::size_t n = inst.size();
    ComplementaryPair p{Vector(n, Scalar(0)), Vector(n, Scalar(0))};
    for (std::size_t i = 0; i < n; ++i) (b.contains(i) ? p.z : p.w)[i] = x[i];
    const Vector r = residual(inst, p.w, p.z);
    if (!std::all_of(r.begin(), r.end(), [](const Scalar& v) { return v == 0; }))
        throw Error("internal: complementary pair violates w - Mz = q for basis " + b.to_string());
    return p;
}

/// True iff M_B^{-1} q >= 0, i.e. (w(B), z(B)) solves the unperturbed LCP.
inline bool basis_test(const LCPInstance& inst, const Basis& b) {
    const Vector x = basic_solution(inst, b);
    return std::all_of(x.begin(), x.end(), [](const Scalar& v) { return v >= 0; });
}

/// Row i holds [(M_B^{-1} q)_i, then row i of M_B^{-1} ordered by the
/// instance's perturbation ranks]. One elimination on [q | I].
inline std::vector<LexVector> lex_solve(const LCPInstance& inst, const Basis& b) {
    const std::size_t n = inst.size();
    Matrix rhs(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        rhs(i, 0) = inst.rhs()[i];
        rhs(i, 1 + i) = 1;
    }
    const Matrix sol = gauss_solve(basis_matrix(inst.matrix(), b), rhs);
    const auto rank = inst.perturbation();
    std::vector<LexVector> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = rows[i].coefficients;
        c.resize(n + 1);
        c[0] = sol(i, 0);
        for (std::size_t j = 0; j < n; ++j) c[1 + rank[j]] = sol(i, 1 + j);
    }
    return rows;
}

/// Sign of the first nonzero coefficient.
inline LexSign lex_sign(const LexVector& v) {
    for (const Scalar& c : v.coefficients) {
        if (c > 0) return LexSign::positive;
        if (c < 0) return LexSign::negative;
    }
    throw AllZero("lexicographic vector has no nonzero coefficient");
}

/// Lex sign of every coordinate of M_B^{-1} q(eps). The full [q | I]
/// solve is only done when some unperturbed coordinate is exactly zero.
inline std::vector<LexSign> lex_signs(const LCPInstance& inst, const Basis& b) {
    const Vector x = basic_solution(inst, b);
    std::vector<LexSign> s(x.size());
    bool tie = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) tie = true;
        s[i] = x[i] < 0 ? LexSign::negative : LexSign::positive;
    }
    if (tie) {
        const auto rows = lex_solve(inst, b);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i] == 0) s[i] = lex_sign(rows[i]);
    }
    return s;
}

/// True iff every coordinate of M_B^{-1} q(eps) is lex-positive. For a
/// P-matrix exactly one basis passes. x must be basic_solution(inst, b).
inline bool basis_test_lex(const LCPInstance& inst, const Basis& b, const Vector& x) {
    bool tie = false;
    for (const Scalar& v : x) {
        if (v < 0) return false;
        if (v == 0) tie = true;
    }
    if (!tie) return true;
    const auto rows = lex_solve(inst, b);
    return std::all_of(rows.begin(), rows.end(), [](const LexVector& r) { return lex_sign(r) == LexSign::positive; });
}

inline bool basis_test_lex(const LCPInstance& inst, const Basis& b) { return basis_test_lex(inst, b, basic_solution(inst, b)); }

/// Checks w - Mz = q, w >= 0, z >= 0 and w^T z = 0 exactly.
inline bool verify_solution(const LCPInstance& inst, const ComplementaryPair& pair) {
    const std::size_t n = inst.size();
    if (pair.w.size() != n || pair.z.size() != n)
        throw DimensionMismatch("pair has lengths " + std::to_string(pair.w.size()) + "/" + std::to_string(pair.z.size()) + ", expected " + std::to_string(n));
    Scalar dot(0);
    for (std::size_t i = 0; i < n; ++i) {
        if (pair.w[i] < 0 || pair.z[i] < 0) return false;
        dot += pair.w[i] * pair.z[i];
    }
    if (dot != 0) return false;
    const Vector r = residual(inst, pair.w, pair.z);
    return std::all_of(r.begin(), r.end(), [](const Scalar& v) { return v == 0; });
}

} // namespace hesslcp

#endif // HESSLCP_LCP_HPP
