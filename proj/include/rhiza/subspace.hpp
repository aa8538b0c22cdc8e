#pragma once

#include <vector>

#include "rhiza/matrix.hpp"

namespace rhiza {

// Subspace of F^n, stored as the unique reduced-row-echelon basis with zero
// rows dropped. Equality of subspaces is therefore plain representation
// equality, which the series-stabilization logic relies on.
class Subspace {
  public:
    explicit Subspace(int ambient) : ambient_(ambient), basis_(0, ambient) {}

    static Subspace span_of(const std::vector<Vec>& vectors, int ambient) {
        auto [red, rk] = rref(Matrix::from_rows(vectors, ambient));
        Matrix basis(rk, ambient);
        for (int r = 0; r < rk; ++r)
            for (int c = 0; c < ambient; ++c) basis(r, c) = red(r, c);
        Subspace s(ambient);
        s.basis_ = std::move(basis);
        return s;
    }

    static Subspace full(int ambient) {
        Subspace s(ambient);
        s.basis_ = Matrix::identity(ambient);
        return s;
    }

    static Subspace zero(int ambient) { return Subspace(ambient); }

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vec basis_vector(int i) const { return basis_.row(i); }

    bool is_zero() const { return basis_.rows() == 0; }
    bool is_full() const { return basis_.rows() == ambient_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    // Reduce v by the RREF basis rows; the remainder is the canonical coset
    // representative (zero iff v lies in the subspace).
    Vec reduce(Vec v) const {
        if (static_cast<int>(v.size()) != ambient_)
            throw DimensionMismatchError("vector/subspace ambient mismatch");
        for (int r = 0; r < basis_.rows(); ++r) {
            int p = pivot_column(r);
            Scalar f = v[static_cast<size_t>(p)];
            if (f.is_zero()) continue;
            for (int j = p; j < ambient_; ++j)
                v[static_cast<size_t>(j)] -= f * basis_(r, j);
        }
        return v;
    }

    int pivot_column(int r) const {
        for (int c = 0; c < ambient_; ++c)
            if (!basis_(r, c).is_zero()) return c;
        throw Error("zero row in subspace basis");
    }

    bool contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& o) const {
        if (o.ambient_ != ambient_) throw DimensionMismatchError("ambient mismatch");
        for (int r = 0; r < o.dim(); ++r)
            if (!contains(o.basis_vector(r))) return false;
        return true;
    }

    // Basis of the annihilator {f : f(v) = 0 for all v here}, identified with
    // F^n via the standard pairing.
    Subspace annihilator() const {
        auto vecs = kernel_basis(basis_);
        return span_of(vecs, ambient_);
    }

  private:
    int ambient_;
    Matrix basis_;
};

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatchError("ambient mismatch");
    std::vector<Vec> rows;
    for (int r = 0; r < a.dim(); ++r) rows.push_back(a.basis_vector(r));
    for (int r = 0; r < b.dim(); ++r) rows.push_back(b.basis_vector(r));
    return Subspace::span_of(rows, a.ambient());
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatchError("ambient mismatch");
    return subspace_sum(a.annihilator(), b.annihilator()).annihilator();
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw DimensionMismatchError("ambient mismatch");
    return a == b;
}

inline Subspace kernel(const Matrix& m) {
    return Subspace::span_of(kernel_basis(m), m.cols());
}

} // namespace rhiza
