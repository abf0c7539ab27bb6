#ifndef HESSLCP_ANALYSIS_HPP
#define HESSLCP_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hesslcp/basis.hpp"
#include "hesslcp/error.hpp"
#include "hesslcp/lcp.hpp"
#include "hesslcp/limits.hpp"
#include "hesslcp/matrix.hpp"

namespace hesslcp {

/// Band structure of a square matrix. Half-bandwidths count the nonzero
/// diagonals strictly below (left) or above (right) the main diagonal,
/// measured by the outermost one.
struct StructureProfile {
    bool is_tridiagonal = false;
    bool is_lower_hessenberg = false;
    bool is_upper_hessenberg = false;
    std::size_t bandwidth = 0;
    std::size_t left_half_bandwidth = 0;
    std::size_t right_half_bandwidth = 0;
};

template <typename T>
StructureProfile classify(const MatrixT<T>& m) {
    if (!m.square()) throw NotSquare("classify: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    StructureProfile p;
    bool any = false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j) == 0) continue;
            any = true;
            if (i > j && i - j > p.left_half_bandwidth) p.left_half_bandwidth = i - j;
            if (j > i && j - i > p.right_half_bandwidth) p.right_half_bandwidth = j - i;
        }
    p.bandwidth = any ? p.left_half_bandwidth + p.right_half_bandwidth + 1 : 0;
    p.is_lower_hessenberg = p.right_half_bandwidth <= 1;
    p.is_upper_hessenberg = p.left_half_bandwidth <= 1;
    p.is_tridiagonal = p.is_lower_hessenberg && p.is_upper_hessenberg;
    return p;
}

/// Exhaustive check that all 2^n - 1 principal minors are positive.
inline bool is_p_matrix(const Matrix& m, std::size_t limit = enumeration_limit()) {
    if (!m.square()) throw NotSquare("is_p_matrix");
    const std::size_t n = m.rows();
    check_size(n, limit, "is_p_matrix");
    if (n == 0) return true;
    // Cheap rejection on the diagonal before the full sweep.
    for (std::size_t i = 0; i < n; ++i)
        if (m(i, i) <= 0) return false;
    IndexSet k;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        k.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) k.push_back(i);
        if (k.size() == 1) continue;
        if (determinant(principal_submatrix(m, k)) <= 0) return false;
    }
    return true;
}

/// Nonpositive off-diagonal entries.
template <typename T>
bool is_z_matrix(const MatrixT<T>& m) {
    if (!m.square()) throw NotSquare("is_z_matrix");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (i != j && m(i, j) > 0) return false;
    return true;
}

/// True iff no basis has a zero coordinate in M_B^{-1} q (unperturbed).
inline bool is_nondegenerate(const LCPInstance& inst, std::size_t limit = enumeration_limit()) {
    const std::size_t n = inst.size();
    check_size(n, limit, "is_nondegenerate");
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        const Vector x = basic_solution(inst, Basis::from_mask(mask));
        for (const Scalar& v : x)
            if (v == 0) return false;
    }
    return true;
}

/// Does some window {i, ..., i+t-1} inside [k] miss B entirely?
/// B is 0-based, so [k] corresponds to indices 0..k-1. A window longer
/// than k does not exist, so t > k gives false.
inline bool has_t_hole(const Basis& b, std::size_t k, std::size_t t) {
    if (t == 0) throw InvalidArgument("has_t_hole: t must be at least 1");
    if (b.bound() > k) throw InvalidArgument("has_t_hole: basis " + b.to_string() + " is not a subset of [" + std::to_string(k) + "]");
    if (t > k) return false;
    std::size_t run = 0;
    for (std::size_t i = 0; i < k; ++i) {
        run = b.contains(i) ? 0 : run + 1;
        if (run >= t) return true;
    }
    return false;
}

} // namespace hesslcp

#endif // HESSLCP_ANALYSIS_HPP
