#pragma once

// Dense matrices over an exact field together with the elimination routines
// everything else reduces to: rref, rank, kernel, solve, quotient maps.

#include "relhom/exactlin/field.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace relhom {

template <ExactField F>
class Matrix {
public:
    using value_type = typename F::value_type;

    Matrix() = default;
    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}
    Matrix(F field, std::size_t rows, std::size_t cols, std::vector<value_type> entries)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count does not match shape");
    }

    static Matrix identity(const F& field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
        return m;
    }

    /// Row-major integer literal, mostly for tests.
    static Matrix from_ints(const F& field, std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
        if (entries.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
        std::vector<value_type> v;
        v.reserve(entries.size());
        for (long e : entries) v.push_back(field.from_int(e));
        return Matrix(field, rows, cols, std::move(v));
    }

    [[nodiscard]] const F& field() const { return field_; }
    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }

    value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    [[nodiscard]] std::span<const value_type> entries() const { return data_; }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const value_type& x) { return x.is_zero(); });
    }

    [[nodiscard]] Matrix transpose() const {
        Matrix t(field_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    [[nodiscard]] Matrix column(std::size_t c) const { return block(0, c, rows_, 1); }
    [[nodiscard]] Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }

    [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
        Matrix b(field_, nr, nc);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
        return b;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
        for (std::size_t r = 0; r < b.rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
    }

    [[nodiscard]] Matrix select_columns(std::span<const std::size_t> cols) const {
        Matrix s(field_, rows_, cols.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < cols.size(); ++j) s(r, j) = (*this)(r, cols[j]);
        return s;
    }

    [[nodiscard]] Matrix select_rows(std::span<const std::size_t> rows) const {
        Matrix s(field_, rows.size(), cols_);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < cols_; ++c) s(i, c) = (*this)(rows[i], c);
        return s;
    }

    /// Column-major flattening; used to turn maps into coordinate vectors.
    [[nodiscard]] std::vector<value_type> flatten() const {
        std::vector<value_type> v;
        v.reserve(data_.size());
        for (std::size_t c = 0; c < cols_; ++c)
            for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
        return v;
    }

    static Matrix unflatten(const F& field, std::size_t rows, std::size_t cols, std::span<const value_type> v) {
        if (v.size() != rows * cols) throw std::invalid_argument("flattened size mismatch");
        Matrix m(field, rows, cols);
        std::size_t k = 0;
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = v[k++];
        return m;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix p(a.field_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const auto& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const auto& bkj = b(k, j);
                    if (!bkj.is_zero()) p(i, j) += aik * bkj;
                }
            }
        return p;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }
    friend Matrix operator*(const value_type& s, Matrix a) {
        for (auto& x : a.data_) x = s * x;
        return a;
    }
    Matrix& operator+=(const Matrix& b) {
        check_same_shape(b);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += b.data_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& b) {
        check_same_shape(b);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= b.data_[i];
        return *this;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t r = 0; r < m.rows_; ++r) {
            os << (r ? ", [" : "[");
            for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c).str();
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
    }

    F field_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> data_;
};

template <ExactField F>
Matrix<F> hstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
    Matrix<F> m(a.field(), a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

template <ExactField F>
Matrix<F> vstack(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
    Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

template <ExactField F>
Matrix<F> block_diagonal(const Matrix<F>& a, const Matrix<F>& b) {
    Matrix<F> m(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

/// Matrix whose columns are the given vectors (all of length `rows`).
template <ExactField F>
Matrix<F> from_columns(const F& field, std::size_t rows, const std::vector<std::vector<typename F::value_type>>& columns) {
    Matrix<F> m(field, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

template <ExactField F>
struct RrefResult {
    Matrix<F> reduced;
    std::vector<std::size_t> pivots;
};

/// In-place Gauss-Jordan elimination; returns strictly increasing pivot columns.
template <ExactField F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        auto inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            auto f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <ExactField F>
RrefResult<F> rref(Matrix<F> m) {
    auto pivots = rref_in_place(m);
    return {std::move(m), std::move(pivots)};
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
    if (m.empty()) return 0;
    // Eliminate along the shorter side.
    if (m.rows() > m.cols()) return rref(m.transpose()).pivots.size();
    return rref(m).pivots.size();
}

/// Columns spanning the right kernel, one per free column of rref(m).
template <ExactField F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
    const auto& field = m.field();
    auto [red, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix<F> k(field, m.cols(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
        k(free[j], j) = field.one();
        for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], j) = -red(r, free[j]);
    }
    return k;
}

/// Some X with a·X = b, or nothing when b is not in the column space of a.
template <ExactField F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    const auto& field = a.field();
    auto [red, pivots] = rref(hstack(a, b));
    Matrix<F> x(field, a.cols(), b.cols());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= a.cols()) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[r], c) = red(r, a.cols() + c);
    }
    return x;
}

/// Indices of a maximal independent subset of the columns (first-come).
template <ExactField F>
std::vector<std::size_t> independent_columns(const Matrix<F>& m) {
    return rref(m).pivots;
}

/// Basis (as columns) of the column space, chosen among the columns of m.
template <ExactField F>
Matrix<F> column_space(const Matrix<F>& m) {
    auto idx = independent_columns(m);
    return m.select_columns(idx);
}

template <ExactField F>
bool is_invertible(const Matrix<F>& m) {
    return m.is_square() && rank(m) == m.rows();
}

template <ExactField F>
Matrix<F> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    auto sol = solve(m, Matrix<F>::identity(m.field(), m.rows()));
    if (!sol || rank(m) != m.rows()) throw std::domain_error("matrix is singular");
    return *sol;
}

/// For k with independent columns: L with L·k = I.
template <ExactField F>
Matrix<F> left_inverse(const Matrix<F>& k) {
    const auto n = k.rows();
    auto [red, pivots] = rref(hstack(k, Matrix<F>::identity(k.field(), n)));
    if (pivots.size() < k.cols() || (k.cols() > 0 && pivots[k.cols() - 1] != k.cols() - 1))
        throw std::domain_error("left_inverse: columns are dependent");
    return red.block(0, k.cols(), k.cols(), n);
}

/// Quotient of k^n by the span of the columns of `sub`.
///   projection: (n - r) x n, kernel exactly span(sub), surjective
///   section:    n x (n - r), projection * section = I
template <ExactField F>
struct Quotient {
    Matrix<F> projection;
    Matrix<F> section;
    [[nodiscard]] std::size_t dim() const { return projection.rows(); }
};

template <ExactField F>
Quotient<F> quotient_by(const F& field, std::size_t n, const Matrix<F>& sub) {
    if (sub.rows() != n) throw std::invalid_argument("quotient_by: ambient dimension mismatch");
    Matrix<F> rows(field, 0, n);
    std::vector<std::size_t> pivots;
    if (sub.cols()) {
        auto r = rref(sub.transpose());
        rows = std::move(r.reduced);
        pivots = std::move(r.pivots);
    }
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) rest.push_back(j);
    Matrix<F> proj(field, rest.size(), n);
    Matrix<F> sec(field, n, rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
        auto j = rest[i];
        proj(i, j) = field.one();
        sec(j, i) = field.one();
        for (std::size_t t = 0; t < pivots.size(); ++t) proj(i, pivots[t]) = -rows(t, j);
    }
    return {std::move(proj), std::move(sec)};
}

/// True when every column of `v` lies in the column span of `basis`.
template <ExactField F>
bool in_span(const Matrix<F>& basis, const Matrix<F>& v) {
    if (v.cols() == 0) return true;
    if (basis.cols() == 0) return v.is_zero();
    return solve(basis, v).has_value();
}

/// Basis of the intersection of two column spans in k^n.
template <ExactField F>
Matrix<F> intersect(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.cols() == 0 || b.cols() == 0) return Matrix<F>(a.field(), a.rows(), 0);
    auto k = kernel_basis(hstack(a, -b));
    auto coeffs = k.block(0, 0, a.cols(), k.cols());
    return column_space(a * coeffs);
}

}  // namespace relhom
