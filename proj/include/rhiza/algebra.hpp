#pragma once

#include <vector>

#include "rhiza/matrix.hpp"

namespace rhiza {

// One bilinear operation on a based n-dimensional space, as a structure
// constant tensor: e_i . e_j = sum_k c(i,j,k) e_k. Indices are 0-based here;
// reports and file comments use 1-based labels mirroring e1, e2, ...
class BilinearOp {
  public:
    BilinearOp() : dim_(0) {}
    explicit BilinearOp(int dim)
        : dim_(dim), c_(static_cast<size_t>(dim) * dim * dim) {}

    int dim() const { return dim_; }

    Scalar& c(int i, int j, int k) { return c_[idx(i, j, k)]; }
    const Scalar& c(int i, int j, int k) const { return c_[idx(i, j, k)]; }

    bool operator==(const BilinearOp& o) const { return dim_ == o.dim_ && c_ == o.c_; }
    bool operator!=(const BilinearOp& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& s : c_)
            if (!s.is_zero()) return false;
        return true;
    }

    // Product of basis vectors e_i . e_j as a coordinate vector.
    Vec basis_product(int i, int j) const {
        Vec v(static_cast<size_t>(dim_));
        for (int k = 0; k < dim_; ++k) v[static_cast<size_t>(k)] = c(i, j, k);
        return v;
    }

    // Bilinear extension to arbitrary coordinate vectors.
    Vec eval(const Vec& x, const Vec& y) const {
        if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
            throw DimensionMismatchError("eval: vector dimension mismatch");
        Vec out(static_cast<size_t>(dim_));
        for (int i = 0; i < dim_; ++i) {
            if (x[static_cast<size_t>(i)].is_zero()) continue;
            for (int j = 0; j < dim_; ++j) {
                if (y[static_cast<size_t>(j)].is_zero()) continue;
                Scalar f = x[static_cast<size_t>(i)] * y[static_cast<size_t>(j)];
                for (int k = 0; k < dim_; ++k) {
                    const Scalar& s = c(i, j, k);
                    if (!s.is_zero()) out[static_cast<size_t>(k)] += f * s;
                }
            }
        }
        return out;
    }

    BilinearOp operator+(const BilinearOp& o) const {
        check_dim(o);
        BilinearOp r(dim_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    BilinearOp operator-(const BilinearOp& o) const {
        check_dim(o);
        BilinearOp r(dim_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    BilinearOp operator-() const {
        BilinearOp r(dim_);
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    // Opposite operation: x .op y = y . x.
    BilinearOp opposite() const {
        BilinearOp r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                for (int k = 0; k < dim_; ++k) r.c(i, j, k) = c(j, i, k);
        return r;
    }

    // Pushforward along the invertible map P (column-as-image): the result op'
    // satisfies P(x) .op' P(y) = P(x . y).
    BilinearOp transported(const Matrix& p, const Matrix& p_inv) const {
        BilinearOp r(dim_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) {
                Vec v = p.apply(eval(p_inv.col(i), p_inv.col(j)));
                for (int k = 0; k < dim_; ++k) r.c(i, j, k) = v[static_cast<size_t>(k)];
            }
        return r;
    }

  private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim_ + static_cast<size_t>(j)) * dim_ +
               static_cast<size_t>(k);
    }
    void check_dim(const BilinearOp& o) const {
        if (dim_ != o.dim_) throw DimensionMismatchError("tensor dimensions differ");
    }

    int dim_;
    std::vector<Scalar> c_;
};

// Single-operation algebra (anti-associative, Jacobi-Jordan, ... depending on
// which check produced or accepted it).
struct Algebra {
    int dim = 0;
    BilinearOp mul;

    Algebra() = default;
    explicit Algebra(int d) : dim(d), mul(d) {}
    Algebra(int d, BilinearOp m) : dim(d), mul(std::move(m)) {
        if (mul.dim() != dim) throw DimensionMismatchError("algebra tensor dim mismatch");
    }

    bool operator==(const Algebra& o) const { return dim == o.dim && mul == o.mul; }
};

// Two-operation algebra: the rhizaform candidate object. The type itself
// carries no axiom; check_rhizaform does.
struct TwoOpAlgebra {
    int dim = 0;
    BilinearOp succ;
    BilinearOp prec;

    TwoOpAlgebra() = default;
    explicit TwoOpAlgebra(int d) : dim(d), succ(d), prec(d) {}
    TwoOpAlgebra(int d, BilinearOp s, BilinearOp p)
        : dim(d), succ(std::move(s)), prec(std::move(p)) {
        if (succ.dim() != dim || prec.dim() != dim)
            throw DimensionMismatchError("two-op tensor dim mismatch");
    }

    bool operator==(const TwoOpAlgebra& o) const {
        return dim == o.dim && succ == o.succ && prec == o.prec;
    }

    bool is_zero() const { return succ.is_zero() && prec.is_zero(); }

    TwoOpAlgebra transported(const Matrix& p) const {
        Matrix p_inv = invert(p);
        return TwoOpAlgebra(dim, succ.transported(p, p_inv), prec.transported(p, p_inv));
    }
};

inline Algebra transported(const Algebra& a, const Matrix& p) {
    Matrix p_inv = invert(p);
    return Algebra(a.dim, a.mul.transported(p, p_inv));
}

inline TwoOpAlgebra direct_sum(const TwoOpAlgebra& a, const TwoOpAlgebra& b) {
    TwoOpAlgebra t(a.dim + b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                t.succ.c(i, j, k) = a.succ.c(i, j, k);
                t.prec.c(i, j, k) = a.prec.c(i, j, k);
            }
    for (int i = 0; i < b.dim; ++i)
        for (int j = 0; j < b.dim; ++j)
            for (int k = 0; k < b.dim; ++k) {
                t.succ.c(a.dim + i, a.dim + j, a.dim + k) = b.succ.c(i, j, k);
                t.prec.c(a.dim + i, a.dim + j, a.dim + k) = b.prec.c(i, j, k);
            }
    return t;
}

} // namespace rhiza
