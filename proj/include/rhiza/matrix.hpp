#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "rhiza/scalar.hpp"

namespace rhiza {

// Dense exact matrix, row-major. Linear maps use the column-as-image
// convention throughout: column j is the image of basis vector j.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Scalar(1);
        return m;
    }

    static Matrix from_rows(const std::vector<Vec>& rows, int cols) {
        Matrix m(static_cast<int>(rows.size()), cols);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(rows[r].size()) != cols)
                throw DimensionMismatchError("row length mismatch");
            for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][static_cast<size_t>(c)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& operator()(int r, int c) { return a_[idx(r, c)]; }
    const Scalar& operator()(int r, int c) const { return a_[idx(r, c)]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& s : a_)
            if (!s.is_zero()) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
        return m;
    }

    Matrix operator-() const {
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw DimensionMismatchError("matrix product shape mismatch");
        Matrix m(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (int k = 0; k < cols_; ++k) {
                if ((*this)(r, k).is_zero()) continue;
                for (int c = 0; c < o.cols_; ++c) m(r, c) += (*this)(r, k) * o(k, c);
            }
        return m;
    }

    Matrix scaled(const Scalar& c) const {
        Matrix m(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = c * a_[i];
        return m;
    }

    Vec apply(const Vec& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw DimensionMismatchError("matrix-vector shape mismatch");
        Vec out(static_cast<size_t>(rows_));
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) out[static_cast<size_t>(r)] += (*this)(r, c) * v[static_cast<size_t>(c)];
        return out;
    }

    Matrix transpose() const {
        Matrix m(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
        return m;
    }

    Vec col(int c) const {
        Vec v(static_cast<size_t>(rows_));
        for (int r = 0; r < rows_; ++r) v[static_cast<size_t>(r)] = (*this)(r, c);
        return v;
    }

    Vec row(int r) const {
        Vec v(static_cast<size_t>(cols_));
        for (int c = 0; c < cols_; ++c) v[static_cast<size_t>(c)] = (*this)(r, c);
        return v;
    }

    void swap_rows(int r1, int r2) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
    }

  private:
    size_t idx(int r, int c) const {
        return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
    }
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatchError("matrix shapes differ");
    }

    int rows_;
    int cols_;
    std::vector<Scalar> a_;
};

// Reduced row echelon form; returns (rref, rank). Gauss-Jordan with exact
// division, no pivoting heuristics needed.
inline std::pair<Matrix, int> rref(Matrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (!m(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        m.swap_rows(rank, pivot);
        Scalar inv = m(rank, c).inverse();
        for (int j = c; j < m.cols(); ++j) m(rank, j) = inv * m(rank, j);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || m(r, c).is_zero()) continue;
            Scalar f = m(r, c);
            for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return {std::move(m), rank};
}

inline int rank(const Matrix& m) { return rref(m).second; }

// Basis of {v : m v = 0}, one vector per row of the result.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
    auto [r, rk] = rref(m);
    std::vector<int> pivot_col;
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
    int row = 0;
    for (int c = 0; c < m.cols() && row < rk; ++c) {
        if (!r(row, c).is_zero()) {
            pivot_col.push_back(c);
            is_pivot[static_cast<size_t>(c)] = true;
            ++row;
        }
    }
    std::vector<Vec> basis;
    for (int c = 0; c < m.cols(); ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        Vec v(static_cast<size_t>(m.cols()));
        v[static_cast<size_t>(c)] = Scalar(1);
        for (size_t p = 0; p < pivot_col.size(); ++p)
            v[static_cast<size_t>(pivot_col[p])] = -r(static_cast<int>(p), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Matrix invert(const Matrix& m) {
    if (!m.is_square()) throw DimensionMismatchError("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(1);
    }
    auto [red, rk] = rref(std::move(aug));
    for (int r = 0; r < n; ++r) {
        bool left_zero = true;
        for (int c = 0; c < n; ++c)
            if (!red(r, c).is_zero()) { left_zero = false; break; }
        if (left_zero) throw SingularMatrixError();
    }
    Matrix inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
    return inv;
}

// One exact solution of A x = b (free variables set to zero), or nullopt if
// inconsistent.
inline std::optional<Vec> solve_linear(const Matrix& a, const Vec& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatchError("solve_linear shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[static_cast<size_t>(r)];
    }
    auto [red, rk] = rref(std::move(aug));
    Vec x(static_cast<size_t>(a.cols()));
    for (int r = 0; r < rk; ++r) {
        int p = -1;
        for (int c = 0; c <= a.cols(); ++c)
            if (!red(r, c).is_zero()) { p = c; break; }
        if (p == a.cols()) return std::nullopt; // row (0 ... 0 | 1)
        x[static_cast<size_t>(p)] = red(r, a.cols());
    }
    return x;
}

inline Scalar determinant(Matrix m) {
    if (!m.is_square()) throw DimensionMismatchError("determinant of non-square matrix");
    int n = m.rows();
    Scalar det(1);
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (!m(r, c).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Scalar(0);
        if (pivot != c) {
            m.swap_rows(c, pivot);
            det = -det;
        }
        det *= m(c, c);
        Scalar inv = m(c, c).inverse();
        for (int r = c + 1; r < n; ++r) {
            if (m(r, c).is_zero()) continue;
            Scalar f = m(r, c) * inv;
            for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

} // namespace rhiza
