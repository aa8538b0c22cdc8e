#pragma once

#include <string>
#include <vector>

#include "rhiza/identities.hpp"

namespace rhiza {

// Bimodule (V, l, r) of an anti-associative algebra: matrix families indexed
// by the base basis, acting on module coordinates (column-as-image). The
// three conditions are the sign-flipped module axioms:
//   l(x*y) = -l(x)l(y),  r(x*y) = -r(y)r(x),  l(x)r(y) = -r(y)l(x).
struct Bimodule {
    Algebra base;
    int module_dim = 0;
    std::vector<Matrix> l; // l[i] = action of e_i on the left
    std::vector<Matrix> r; // r[i] = action of e_i on the right

    Bimodule() = default;
    Bimodule(Algebra b, int mdim, std::vector<Matrix> lf, std::vector<Matrix> rf)
        : base(std::move(b)), module_dim(mdim), l(std::move(lf)), r(std::move(rf)) {
        if (static_cast<int>(l.size()) != base.dim || static_cast<int>(r.size()) != base.dim)
            throw DimensionMismatchError("bimodule family length must equal base dim");
        for (const Matrix& m : l)
            if (m.rows() != module_dim || m.cols() != module_dim)
                throw DimensionMismatchError("bimodule l matrix shape mismatch");
        for (const Matrix& m : r)
            if (m.rows() != module_dim || m.cols() != module_dim)
                throw DimensionMismatchError("bimodule r matrix shape mismatch");
    }

    // l(x) for an arbitrary base element, by linearity in the index.
    Matrix l_of(const Vec& x) const {
        Matrix acc(module_dim, module_dim);
        for (int i = 0; i < base.dim; ++i)
            if (!x[static_cast<size_t>(i)].is_zero())
                acc = acc + l[static_cast<size_t>(i)].scaled(x[static_cast<size_t>(i)]);
        return acc;
    }

    Matrix r_of(const Vec& x) const {
        Matrix acc(module_dim, module_dim);
        for (int i = 0; i < base.dim; ++i)
            if (!x[static_cast<size_t>(i)].is_zero())
                acc = acc + r[static_cast<size_t>(i)].scaled(x[static_cast<size_t>(i)]);
        return acc;
    }
};

inline IdentityReport check_bimodule(const Bimodule& b) {
    if (!check_anti_associative(b.base).pass)
        throw PreconditionError("check_bimodule requires an anti-associative base");
    IdentityReport rep{"bimodule"};
    int n = b.base.dim;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix l_prod = b.l_of(b.base.mul.basis_product(i, j));
            Matrix r_prod = b.r_of(b.base.mul.basis_product(i, j));
            Matrix lhs1 = l_prod + b.l[static_cast<size_t>(i)] * b.l[static_cast<size_t>(j)];
            Matrix lhs2 = r_prod + b.r[static_cast<size_t>(j)] * b.r[static_cast<size_t>(i)];
            Matrix lhs3 = b.l[static_cast<size_t>(i)] * b.r[static_cast<size_t>(j)] +
                          b.r[static_cast<size_t>(j)] * b.l[static_cast<size_t>(i)];
            for (int c = 0; c < b.module_dim; ++c) {
                if (!vec_is_zero(lhs1.col(c)))
                    rep.record("bimodule_left", {i + 1, j + 1, c + 1}, lhs1.col(c));
                if (!vec_is_zero(lhs2.col(c)))
                    rep.record("bimodule_right", {i + 1, j + 1, c + 1}, lhs2.col(c));
                if (!vec_is_zero(lhs3.col(c)))
                    rep.record("bimodule_mixed", {i + 1, j + 1, c + 1}, lhs3.col(c));
            }
        }
    return rep;
}

// (A, L, R): left/right multiplications of the algebra on itself.
inline Bimodule regular_bimodule(const Algebra& a) {
    if (!check_anti_associative(a).pass)
        throw PreconditionError("regular_bimodule requires an anti-associative algebra");
    std::vector<Matrix> l(static_cast<size_t>(a.dim), Matrix(a.dim, a.dim));
    std::vector<Matrix> r(static_cast<size_t>(a.dim), Matrix(a.dim, a.dim));
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                l[static_cast<size_t>(i)](k, j) = a.mul.c(i, j, k); // L(e_i)e_j = e_i e_j
                r[static_cast<size_t>(i)](k, j) = a.mul.c(j, i, k); // R(e_i)e_j = e_j e_i
            }
    return Bimodule(a, a.dim, std::move(l), std::move(r));
}

// (A, L_succ, R_prec) over the sum algebra; a bimodule precisely when t is
// rhizaform, so no precondition is imposed here (the iff tests need both
// directions).
inline Bimodule rhizaform_bimodule(const TwoOpAlgebra& t) {
    Algebra base = sum_operation(t);
    std::vector<Matrix> l(static_cast<size_t>(t.dim), Matrix(t.dim, t.dim));
    std::vector<Matrix> r(static_cast<size_t>(t.dim), Matrix(t.dim, t.dim));
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k) {
                l[static_cast<size_t>(i)](k, j) = t.succ.c(i, j, k); // L_succ(e_i)e_j
                r[static_cast<size_t>(i)](k, j) = t.prec.c(j, i, k); // R_prec(e_i)e_j = e_j < e_i
            }
    return Bimodule(std::move(base), t.dim, std::move(l), std::move(r));
}

// (V*, r*, l*): dual actions via transposition in the standard pairing.
inline Bimodule dual_bimodule(const Bimodule& b) {
    if (!check_bimodule(b).pass)
        throw PreconditionError("dual_bimodule requires a verified bimodule");
    std::vector<Matrix> l, r;
    l.reserve(b.l.size());
    r.reserve(b.r.size());
    for (size_t i = 0; i < b.l.size(); ++i) {
        l.push_back(b.r[i].transpose());
        r.push_back(b.l[i].transpose());
    }
    return Bimodule(b.base, b.module_dim, std::move(l), std::move(r));
}

// Anti-associative structure on A + V: (x,u)(y,v) = (xy, l(x)v + r(y)u).
// Anti-associativity of the result is equivalent to the bimodule conditions,
// so the construction itself imposes no precondition.
inline Algebra semidirect_product(const Bimodule& b) {
    int n = b.base.dim;
    int m = b.module_dim;
    Algebra out(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.mul.c(i, j, k) = b.base.mul.c(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                out.mul.c(i, n + j, n + k) = b.l[static_cast<size_t>(i)](k, j);
                out.mul.c(n + j, i, n + k) = b.r[static_cast<size_t>(i)](k, j);
            }
    return out;
}

// Hat-double on A + A: (x,a)(y,b) = (x>y + x<y, x>b + a<y). Anti-associative
// iff t is rhizaform.
inline Algebra hat_double(const TwoOpAlgebra& t) {
    int n = t.dim;
    Algebra out(2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                out.mul.c(i, j, k) = t.succ.c(i, j, k) + t.prec.c(i, j, k);
                out.mul.c(i, n + j, n + k) = t.succ.c(i, j, k);
                out.mul.c(n + i, j, n + k) = t.prec.c(i, j, k);
            }
    return out;
}

} // namespace rhiza
