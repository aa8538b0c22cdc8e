#pragma once

#include <string>
#include <vector>

#include "rhiza/algebra.hpp"

namespace rhiza {

// ---------------------------------------------------------------------------
// Residual kernels, generic over the coefficient ring.
//
// Every defining identity of the workbench is written once, as a residual
// that must vanish on basis tuples. `Mul` is any callable (i,j,k) -> R; the
// exact checkers instantiate R = Scalar, the parametric solver R = Poly, so
// the checker and the solver cannot drift apart.
// ---------------------------------------------------------------------------

// x(yz) + (xy)z at (e_i, e_j, e_k).
template <class R, class Mul>
std::vector<R> anti_assoc_residual(int dim, const Mul& mul, int i, int j, int k) {
    std::vector<R> out(static_cast<size_t>(dim));
    for (int m = 0; m < dim; ++m) {
        R acc{};
        for (int p = 0; p < dim; ++p)
            acc = acc + mul(i, j, p) * mul(p, k, m) + mul(j, k, p) * mul(i, p, m);
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

// xy - yx at (e_i, e_j).
template <class R, class Mul>
std::vector<R> commutator_residual(int dim, const Mul& mul, int i, int j) {
    std::vector<R> out(static_cast<size_t>(dim));
    for (int m = 0; m < dim; ++m)
        out[static_cast<size_t>(m)] = mul(i, j, m) - mul(j, i, m);
    return out;
}

// x(yz) + y(zx) + z(xy) at (e_i, e_j, e_k).
template <class R, class Mul>
std::vector<R> jacobi_residual(int dim, const Mul& mul, int i, int j, int k) {
    std::vector<R> out(static_cast<size_t>(dim));
    for (int m = 0; m < dim; ++m) {
        R acc{};
        for (int p = 0; p < dim; ++p)
            acc = acc + mul(j, k, p) * mul(i, p, m) + mul(k, i, p) * mul(j, p, m) +
                  mul(i, j, p) * mul(k, p, m);
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

// (xy)z + x(yz) + (yx)z + y(xz) at (e_i, e_j, e_k).
template <class R, class Mul>
std::vector<R> pre_jj_residual(int dim, const Mul& mul, int i, int j, int k) {
    std::vector<R> out(static_cast<size_t>(dim));
    for (int m = 0; m < dim; ++m) {
        R acc{};
        for (int p = 0; p < dim; ++p)
            acc = acc + mul(i, j, p) * mul(p, k, m) + mul(j, k, p) * mul(i, p, m) +
                  mul(j, i, p) * mul(p, k, m) + mul(i, k, p) * mul(j, p, m);
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

// The three rhizaform axioms, with * = succ + prec:
//   (x*y)>z + x>(y>z),   x<(y*z) + (x<y)<z,   x>(y<z) + (x>y)<z.
template <class R, class Succ, class Prec>
std::vector<R> rhiza_succ_residual(int dim, const Succ& s, const Prec& p_, int i, int j, int k) {
    std::vector<R> out(static_cast<size_t>(dim));
    for (int m = 0; m < dim; ++m) {
        R acc{};
        for (int p = 0; p < dim; ++p)
            acc = acc + (s(i, j, p) + p_(i, j, p)) * s(p, k, m) + s(j, k, p) * s(i, p, m);
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

template <class R, class Succ, class Prec>
std::vector<R> rhiza_prec_residual(int dim, const Succ& s, const Prec& p_, int i, int j, int k) {
    std::vector<R> out(static_cast<size_t>(dim));
    for (int m = 0; m < dim; ++m) {
        R acc{};
        for (int p = 0; p < dim; ++p)
            acc = acc + (s(j, k, p) + p_(j, k, p)) * p_(i, p, m) + p_(i, j, p) * p_(p, k, m);
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

template <class R, class Succ, class Prec>
std::vector<R> rhiza_mixed_residual(int dim, const Succ& s, const Prec& p_, int i, int j, int k) {
    std::vector<R> out(static_cast<size_t>(dim));
    for (int m = 0; m < dim; ++m) {
        R acc{};
        for (int p = 0; p < dim; ++p)
            acc = acc + p_(j, k, p) * s(i, p, m) + s(i, j, p) * p_(p, k, m);
        out[static_cast<size_t>(m)] = acc;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Violation {
    std::string axiom;
    std::vector<int> indices; // 1-based basis indices, mirroring e1, e2, ...
    Vec residual;
};

struct IdentityReport {
    std::string name;
    bool pass = true;
    std::vector<Violation> violations;

    void record(std::string axiom, std::vector<int> indices, Vec residual) {
        pass = false;
        violations.push_back({std::move(axiom), std::move(indices), std::move(residual)});
    }
};

namespace detail {
inline auto ten(const BilinearOp& op) {
    return [&op](int i, int j, int k) -> Scalar { return op.c(i, j, k); };
}
} // namespace detail

// ---------------------------------------------------------------------------
// Identity checks. Multilinearity makes basis-tuple verification complete.
// ---------------------------------------------------------------------------

inline IdentityReport check_anti_associative(const Algebra& a) {
    IdentityReport rep{"anti_associative"};
    auto mul = detail::ten(a.mul);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Vec r = anti_assoc_residual<Scalar>(a.dim, mul, i, j, k);
                if (!vec_is_zero(r)) rep.record("anti_associative", {i + 1, j + 1, k + 1}, r);
            }
    return rep;
}

inline IdentityReport check_jacobi_jordan(const Algebra& a) {
    IdentityReport rep{"jacobi_jordan"};
    auto mul = detail::ten(a.mul);
    for (int i = 0; i < a.dim; ++i)
        for (int j = i + 1; j < a.dim; ++j) {
            Vec r = commutator_residual<Scalar>(a.dim, mul, i, j);
            if (!vec_is_zero(r)) rep.record("commutative", {i + 1, j + 1}, r);
        }
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Vec r = jacobi_residual<Scalar>(a.dim, mul, i, j, k);
                if (!vec_is_zero(r)) rep.record("jacobi", {i + 1, j + 1, k + 1}, r);
            }
    return rep;
}

inline IdentityReport check_pre_jacobi_jordan(const Algebra& a) {
    IdentityReport rep{"pre_jacobi_jordan"};
    auto mul = detail::ten(a.mul);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            for (int k = 0; k < a.dim; ++k) {
                Vec r = pre_jj_residual<Scalar>(a.dim, mul, i, j, k);
                if (!vec_is_zero(r)) rep.record("pre_jacobi_jordan", {i + 1, j + 1, k + 1}, r);
            }
    return rep;
}

inline IdentityReport check_rhizaform(const TwoOpAlgebra& t) {
    IdentityReport rep{"rhizaform"};
    auto s = detail::ten(t.succ);
    auto p = detail::ten(t.prec);
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k) {
                Vec r1 = rhiza_succ_residual<Scalar>(t.dim, s, p, i, j, k);
                if (!vec_is_zero(r1)) rep.record("rhizaform_succ", {i + 1, j + 1, k + 1}, r1);
                Vec r2 = rhiza_prec_residual<Scalar>(t.dim, s, p, i, j, k);
                if (!vec_is_zero(r2)) rep.record("rhizaform_prec", {i + 1, j + 1, k + 1}, r2);
                Vec r3 = rhiza_mixed_residual<Scalar>(t.dim, s, p, i, j, k);
                if (!vec_is_zero(r3)) rep.record("rhizaform_mixed", {i + 1, j + 1, k + 1}, r3);
            }
    return rep;
}

inline bool is_rhizaform(const TwoOpAlgebra& t) { return check_rhizaform(t).pass; }

// ---------------------------------------------------------------------------
// Derived operations (the functor surface).
// ---------------------------------------------------------------------------

inline Algebra sum_operation(const TwoOpAlgebra& t) {
    return Algebra(t.dim, t.succ + t.prec);
}

enum class CircConvention { Plus, Minus };

// x.y = x>y + y<x (Plus) or x>y - y<x (Minus). Plus is the primary
// convention: it is the one whose symmetrization matches the sum operation's
// and whose pre-Jacobi-Jordan residual cancels from the rhizaform axioms.
inline Algebra circ_operation(const TwoOpAlgebra& t,
                              CircConvention conv = CircConvention::Plus) {
    BilinearOp prec_op = t.prec.opposite();
    return Algebra(t.dim, conv == CircConvention::Plus ? t.succ + prec_op
                                                       : t.succ - prec_op);
}

// [x,y] = xy + yx.
inline Algebra jj_bracket(const Algebra& a) {
    return Algebra(a.dim, a.mul + a.mul.opposite());
}

inline IdentityReport check_anti_assoc_admissible(const TwoOpAlgebra& t) {
    IdentityReport rep = check_anti_associative(sum_operation(t));
    rep.name = "anti_assoc_admissible";
    for (auto& v : rep.violations) v.axiom = "admissible";
    return rep;
}

// Sum and circ share one sub-adjacent bracket, and for a rhizaform input
// that bracket is Jacobi-Jordan.
inline bool check_diagram_commutes(const TwoOpAlgebra& t) {
    if (!is_rhizaform(t))
        throw PreconditionError("check_diagram_commutes requires a rhizaform input");
    Algebra b1 = jj_bracket(sum_operation(t));
    Algebra b2 = jj_bracket(circ_operation(t, CircConvention::Plus));
    return b1.mul == b2.mul && check_jacobi_jordan(b1).pass;
}

// With one operation identically zero the other one must be anti-associative
// for rhizaform inputs; this checks the remaining operation directly.
inline bool check_single_op_degeneration(const TwoOpAlgebra& t) {
    if (!t.succ.is_zero() && !t.prec.is_zero())
        throw PreconditionError("check_single_op_degeneration requires one vanishing operation");
    const BilinearOp& live = t.succ.is_zero() ? t.prec : t.succ;
    return check_anti_associative(Algebra(t.dim, live)).pass;
}

} // namespace rhiza
