#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "rhiza/bimodule.hpp"

namespace rhiza {

// O-operator candidate: T maps the module into the base algebra, column j =
// image of module basis vector j.
struct OOperator {
    Bimodule bim;
    Matrix t;

    OOperator(Bimodule b, Matrix m) : bim(std::move(b)), t(std::move(m)) {
        if (t.rows() != bim.base.dim || t.cols() != bim.module_dim)
            throw DimensionMismatchError("O-operator matrix must be (base dim) x (module dim)");
    }
};

// T(u)*T(v) = T(l(T(u))v + r(T(v))u) on module basis pairs.
inline IdentityReport check_o_operator(const OOperator& o) {
    if (!check_bimodule(o.bim).pass)
        throw PreconditionError("check_o_operator requires a verified bimodule");
    IdentityReport rep{"o_operator"};
    int m = o.bim.module_dim;
    for (int a = 0; a < m; ++a) {
        Vec ta = o.t.col(a);
        Matrix l_ta = o.bim.l_of(ta);
        for (int b = 0; b < m; ++b) {
            Vec tb = o.t.col(b);
            Vec lhs = o.bim.base.mul.eval(ta, tb);
            Vec inner = vec_add(l_ta.col(b), o.bim.r_of(tb).col(a));
            Vec rhs = o.t.apply(inner);
            Vec res = vec_sub(lhs, rhs);
            if (!vec_is_zero(res)) rep.record("o_operator", {a + 1, b + 1}, res);
        }
    }
    return rep;
}

// R(x)*R(y) = R(R(x)*y + x*R(y)) on basis pairs.
inline IdentityReport check_rota_baxter(const Algebra& a, const Matrix& r) {
    if (!check_anti_associative(a).pass)
        throw PreconditionError("check_rota_baxter requires an anti-associative algebra");
    if (r.rows() != a.dim || r.cols() != a.dim)
        throw PreconditionError("Rota-Baxter matrix must be square of the algebra dimension");
    IdentityReport rep{"rota_baxter"};
    for (int i = 0; i < a.dim; ++i) {
        Vec ri = r.col(i);
        for (int j = 0; j < a.dim; ++j) {
            Vec rj = r.col(j);
            Vec lhs = a.mul.eval(ri, rj);
            Vec inner = vec_add(a.mul.eval(ri, unit_vec(a.dim, j)),
                                a.mul.eval(unit_vec(a.dim, i), rj));
            Vec res = vec_sub(lhs, r.apply(inner));
            if (!vec_is_zero(res)) rep.record("rota_baxter", {i + 1, j + 1}, res);
        }
    }
    return rep;
}

namespace detail {

inline bool rota_baxter_holds(const Algebra& a, const Matrix& r) {
    for (int i = 0; i < a.dim; ++i) {
        Vec ri = r.col(i);
        for (int j = 0; j < a.dim; ++j) {
            Vec rj = r.col(j);
            Vec inner = vec_add(a.mul.eval(ri, unit_vec(a.dim, j)),
                                a.mul.eval(unit_vec(a.dim, i), rj));
            if (!vec_is_zero(vec_sub(a.mul.eval(ri, rj), r.apply(inner)))) return false;
        }
    }
    return true;
}

} // namespace detail

// All rationals p/q in lowest terms with |p| <= h, 1 <= q <= h, sorted
// ascending. h = 0 yields just 0.
inline std::vector<Scalar> rationals_of_height(int h) {
    std::vector<Scalar> vals;
    vals.push_back(Scalar(0));
    for (int q = 1; q <= h; ++q)
        for (int p = 1; p <= h; ++p) {
            if (std::gcd(p, q) != 1) continue;
            vals.push_back(Scalar::rational(p, q));
            vals.push_back(Scalar::rational(-p, q));
        }
    std::sort(vals.begin(), vals.end());
    return vals;
}

// Bounded-height exhaustive search for Rota-Baxter operators: every matrix
// whose entries have numerator and denominator of absolute value <= height,
// filtered by the exact verifier, in odometer order over sorted entry values.
inline std::vector<Matrix> rb_search(const Algebra& a, int height) {
    if (!check_anti_associative(a).pass)
        throw PreconditionError("rb_search requires an anti-associative algebra");
    std::vector<Scalar> vals = rationals_of_height(height);
    int slots = a.dim * a.dim;
    std::vector<size_t> odo(static_cast<size_t>(slots), 0);
    std::vector<Matrix> found;
    while (true) {
        Matrix r(a.dim, a.dim);
        for (int s = 0; s < slots; ++s) r(s / a.dim, s % a.dim) = vals[odo[static_cast<size_t>(s)]];
        if (detail::rota_baxter_holds(a, r)) found.push_back(std::move(r));
        int s = slots - 1;
        while (s >= 0 && ++odo[static_cast<size_t>(s)] == vals.size()) odo[static_cast<size_t>(s--)] = 0;
        if (s < 0) break;
    }
    return found;
}

// Rhizaform structure on the module: u>v = l(T(u))v, u<v = r(T(v))u.
inline TwoOpAlgebra induce_on_module(const OOperator& o) {
    if (!check_o_operator(o).pass)
        throw PreconditionError("induce_on_module requires a verified O-operator");
    int m = o.bim.module_dim;
    TwoOpAlgebra t(m);
    for (int a = 0; a < m; ++a) {
        Matrix l_ta = o.bim.l_of(o.t.col(a));
        Matrix r_ta = o.bim.r_of(o.t.col(a));
        for (int b = 0; b < m; ++b)
            for (int k = 0; k < m; ++k) {
                t.succ.c(a, b, k) = l_ta(k, b); // e_a > e_b = l(T e_a) e_b
                t.prec.c(b, a, k) = r_ta(k, b); // e_b < e_a = r(T e_a) e_b
            }
    }
    return t;
}

// Rhizaform structure on T(V) in the basis of T's pivot columns. Requires the
// structure to be well defined on the image, i.e. kernel elements act
// trivially after applying T; verified on a kernel basis.
inline TwoOpAlgebra induce_on_image(const OOperator& o) {
    if (!check_o_operator(o).pass)
        throw PreconditionError("induce_on_image requires a verified O-operator");
    int m = o.bim.module_dim;

    for (const Vec& w : kernel_basis(o.t)) {
        for (int b = 0; b < m; ++b) {
            Vec tb = o.t.col(b);
            if (!vec_is_zero(o.t.apply(o.bim.r_of(tb).apply(w))) ||
                !vec_is_zero(o.t.apply(o.bim.l_of(tb).apply(w))))
                throw IllDefinedError("image structure is not well defined on ker T");
        }
    }

    auto [red, rk] = rref(o.t);
    std::vector<int> pivots;
    int row = 0;
    for (int c = 0; c < m && row < rk; ++c)
        if (!red(row, c).is_zero()) { pivots.push_back(c); ++row; }

    Matrix w_basis(o.bim.base.dim, rk);
    for (int a = 0; a < rk; ++a)
        for (int r2 = 0; r2 < o.bim.base.dim; ++r2) w_basis(r2, a) = o.t(r2, pivots[static_cast<size_t>(a)]);

    TwoOpAlgebra t(rk);
    for (int a = 0; a < rk; ++a)
        for (int b = 0; b < rk; ++b) {
            Vec ua = unit_vec(m, pivots[static_cast<size_t>(a)]);
            Vec ub = unit_vec(m, pivots[static_cast<size_t>(b)]);
            Vec ta = o.t.col(pivots[static_cast<size_t>(a)]);
            Vec tb = o.t.col(pivots[static_cast<size_t>(b)]);
            Vec succ_img = o.t.apply(o.bim.l_of(ta).apply(ub));
            Vec prec_img = o.t.apply(o.bim.r_of(tb).apply(ua));
            auto sc = solve_linear(w_basis, succ_img);
            auto pc = solve_linear(w_basis, prec_img);
            if (!sc || !pc) throw IllDefinedError("product escapes the image of T");
            for (int k = 0; k < rk; ++k) {
                t.succ.c(a, b, k) = (*sc)[static_cast<size_t>(k)];
                t.prec.c(a, b, k) = (*pc)[static_cast<size_t>(k)];
            }
        }
    return t;
}

// x>y = R(x)*y, x<y = x*R(y) for a Rota-Baxter operator R.
inline TwoOpAlgebra rb_induce(const Algebra& a, const Matrix& r) {
    if (!check_rota_baxter(a, r).pass)
        throw PreconditionError("rb_induce requires a verified Rota-Baxter operator");
    TwoOpAlgebra t(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            Vec s = a.mul.eval(r.col(i), unit_vec(a.dim, j));
            Vec p = a.mul.eval(unit_vec(a.dim, i), r.col(j));
            for (int k = 0; k < a.dim; ++k) {
                t.succ.c(i, j, k) = s[static_cast<size_t>(k)];
                t.prec.c(i, j, k) = p[static_cast<size_t>(k)];
            }
        }
    return t;
}

// Compatible rhizaform structure on the base from an invertible O-operator:
// x>y = T(l(x)T^{-1}y), x<y = T(r(y)T^{-1}x); the sum recovers * exactly.
inline TwoOpAlgebra compatible_from_invertible_o(const OOperator& o) {
    if (o.bim.module_dim != o.bim.base.dim || !o.t.is_square())
        throw SingularMatrixError("O-operator is not invertible");
    Matrix t_inv = invert(o.t); // throws SingularMatrixError when singular
    if (!check_o_operator(o).pass)
        throw PreconditionError("compatible_from_invertible_o requires a verified O-operator");
    int n = o.bim.base.dim;
    TwoOpAlgebra out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec s = o.t.apply(o.bim.l[static_cast<size_t>(i)].apply(t_inv.col(j)));
            Vec p = o.t.apply(o.bim.r[static_cast<size_t>(j)].apply(t_inv.col(i)));
            for (int k = 0; k < n; ++k) {
                out.succ.c(i, j, k) = s[static_cast<size_t>(k)];
                out.prec.c(i, j, k) = p[static_cast<size_t>(k)];
            }
        }
    return out;
}

// Embeds T as \hat T (x,u) = (T(u), 0) on the semidirect product; \hat T is
// Rota-Baxter there iff T is an O-operator.
inline std::pair<Algebra, Matrix> embed_T_hat(const OOperator& o) {
    if (!check_bimodule(o.bim).pass)
        throw PreconditionError("embed_T_hat requires a verified bimodule");
    Algebra amb = semidirect_product(o.bim);
    int n = o.bim.base.dim;
    int m = o.bim.module_dim;
    Matrix that(n + m, n + m);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < m; ++c) that(r, n + c) = o.t(r, c);
    return {std::move(amb), std::move(that)};
}

// \hat{Id}(x,y) = (y,0) on the hat-double; Rota-Baxter for rhizaform t.
inline std::pair<Algebra, Matrix> hat_identity_rb(const TwoOpAlgebra& t) {
    if (!is_rhizaform(t))
        throw PreconditionError("hat_identity_rb requires a rhizaform input");
    Algebra amb = hat_double(t);
    Matrix ihat(2 * t.dim, 2 * t.dim);
    for (int i = 0; i < t.dim; ++i) ihat(i, t.dim + i) = Scalar(1);
    return {std::move(amb), std::move(ihat)};
}

} // namespace rhiza
