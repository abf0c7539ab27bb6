#ifndef HESSLCP_MATRIX_HPP
#define HESSLCP_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hesslcp/error.hpp"
#include "hesslcp/rational.hpp"

namespace hesslcp {

/// Dense column vector.
template <typename T>
using VectorT = std::vector<T>;

using Vector = VectorT<Scalar>;

/// Sorted list of distinct 0-based row/column indices.
using IndexSet = std::vector<std::size_t>;

/// Dense row-major matrix over an exact field.
template <typename T>
class MatrixT {
public:
    using value_type = T;

    MatrixT() = default;

    MatrixT(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    MatrixT(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionMismatch("ragged initializer list");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static MatrixT identity(std::size_t n) {
        MatrixT m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    /// Single-column matrix holding v.
    static MatrixT column(std::span<const T> v) {
        MatrixT m(v.size(), 1);
        std::copy(v.begin(), v.end(), m.data_.begin());
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    VectorT<T> col(std::size_t c) const {
        VectorT<T> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_, data_.begin() + b * cols_);
    }

    MatrixT transpose() const {
        MatrixT t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
    }

    friend bool operator==(const MatrixT& a, const MatrixT& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend MatrixT operator*(const MatrixT& a, const MatrixT& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product");
        MatrixT p(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
            }
        return p;
    }

    friend VectorT<T> operator*(const MatrixT& a, const VectorT<T>& x) {
        if (a.cols_ != x.size()) throw DimensionMismatch("matrix-vector product");
        VectorT<T> y(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                if (a(i, j) != 0) y[i] += a(i, j) * x[j];
        return y;
    }

    friend std::ostream& operator<<(std::ostream& os, const MatrixT& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? ", [" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
            os << ']';
        }
        return os << ']';
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using Matrix = MatrixT<Scalar>;

/// Solves A X = rhs exactly. The pivot in each column is the first
/// nonzero entry at or below the diagonal; exact arithmetic needs no
/// magnitude-based pivoting.
template <typename T>
MatrixT<T> gauss_solve(const MatrixT<T>& a, const MatrixT<T>& rhs) {
    if (!a.square()) throw NotSquare("gauss_solve: coefficient matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    if (rhs.rows() != a.rows()) throw DimensionMismatch("gauss_solve: rhs has " + std::to_string(rhs.rows()) + " rows, expected " + std::to_string(a.rows()));

    const std::size_t n = a.rows();
    const std::size_t m = rhs.cols();
    MatrixT<T> lhs = a;
    MatrixT<T> x = rhs;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && lhs(p, k) == 0) ++p;
        if (p == n) throw SingularMatrix("no nonzero pivot in column " + std::to_string(k + 1));
        lhs.swap_rows(k, p);
        x.swap_rows(k, p);

        T f;
        for (std::size_t r = k + 1; r < n; ++r) {
            if (lhs(r, k) == 0) continue;
            f = lhs(r, k) / lhs(k, k);
            for (std::size_t c = k + 1; c < n; ++c)
                if (lhs(k, c) != 0) lhs(r, c) -= f * lhs(k, c);
            lhs(r, k) = 0;
            for (std::size_t c = 0; c < m; ++c)
                if (x(k, c) != 0) x(r, c) -= f * x(k, c);
        }
    }

    // back substitution
    for (std::size_t k = n; k-- > 0;) {
        for (std::size_t c = 0; c < m; ++c) {
            T& v = x(k, c);
            for (std::size_t j = k + 1; j < n; ++j)
                if (lhs(k, j) != 0 && x(j, c) != 0) v -= lhs(k, j) * x(j, c);
            v /= lhs(k, k);
        }
    }
    return x;
}

/// Solves A x = b for a single right-hand side.
template <typename T>
VectorT<T> gauss_solve(const MatrixT<T>& a, const VectorT<T>& b) {
    return gauss_solve(a, MatrixT<T>::column(b)).col(0);
}

template <typename T>
MatrixT<T> inverse(const MatrixT<T>& a) {
    return gauss_solve(a, MatrixT<T>::identity(a.rows()));
}

/// Exact determinant by elimination; returns 0 for singular input.
template <typename T>
T determinant(const MatrixT<T>& a) {
    if (!a.square()) throw NotSquare("determinant");
    const std::size_t n = a.rows();
    MatrixT<T> u = a;
    T det(1);
    T f;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && u(p, k) == 0) ++p;
        if (p == n) return T(0);
        if (p != k) {
            u.swap_rows(k, p);
            det = -det;
        }
        det *= u(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (u(r, k) == 0) continue;
            f = u(r, k) / u(k, k);
            for (std::size_t c = k + 1; c < n; ++c)
                if (u(k, c) != 0) u(r, c) -= f * u(k, c);
        }
    }
    return det;
}

namespace detail {
inline void check_index_set(std::span<const std::size_t> k, std::size_t n) {
    if (k.empty()) throw EmptyIndexSet("index set must be nonempty");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] >= n) throw IndexOutOfRange("index " + std::to_string(k[i] + 1) + " exceeds dimension " + std::to_string(n));
        if (i > 0 && k[i] <= k[i - 1]) throw InvalidArgument("index set must be strictly increasing");
    }
}
} // namespace detail

/// Rows and columns of A restricted to K (0-based, increasing).
template <typename T>
MatrixT<T> principal_submatrix(const MatrixT<T>& a, std::span<const std::size_t> k) {
    if (!a.square()) throw NotSquare("principal_submatrix");
    detail::check_index_set(k, a.rows());
    MatrixT<T> s(k.size(), k.size());
    for (std::size_t i = 0; i < k.size(); ++i)
        for (std::size_t j = 0; j < k.size(); ++j) s(i, j) = a(k[i], k[j]);
    return s;
}

template <typename T>
VectorT<T> subvector(const VectorT<T>& v, std::span<const std::size_t> k) {
    detail::check_index_set(k, v.size());
    VectorT<T> s;
    s.reserve(k.size());
    for (std::size_t i : k) s.push_back(v[i]);
    return s;
}

/// The leading index set {0, ..., k-1}.
inline IndexSet leading(std::size_t k) {
    IndexSet s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = i;
    return s;
}

} // namespace hesslcp

#endif // HESSLCP_MATRIX_HPP
