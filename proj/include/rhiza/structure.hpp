#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rhiza/identities.hpp"
#include "rhiza/subspace.hpp"
#include "rhiza/symbolic.hpp"

namespace rhiza {

// ---------------------------------------------------------------------------
// Subspace products and nilpotency series
// ---------------------------------------------------------------------------

enum class ProductOps { Succ, Prec, Both };

// Span of all pairwise products of basis vectors of m and n under the
// selected operation(s); M <> N = M>N + M<N when Both.
inline Subspace subspace_product(const TwoOpAlgebra& t, const Subspace& m, const Subspace& n,
                                 ProductOps which = ProductOps::Both) {
    if (m.ambient() != t.dim || n.ambient() != t.dim)
        throw DimensionMismatchError("subspace/algebra ambient mismatch");
    std::vector<Vec> prods;
    for (int a = 0; a < m.dim(); ++a)
        for (int b = 0; b < n.dim(); ++b) {
            if (which != ProductOps::Prec)
                prods.push_back(t.succ.eval(m.basis_vector(a), n.basis_vector(b)));
            if (which != ProductOps::Succ)
                prods.push_back(t.prec.eval(m.basis_vector(a), n.basis_vector(b)));
        }
    return Subspace::span_of(prods, t.dim);
}

enum class SeriesKind { Right, Left, Full };

struct SeriesResult {
    SeriesKind kind;
    std::vector<Subspace> terms; // terms[i] is the (i+1)-st member, terms[0] = A
    std::optional<int> nilindex; // smallest k with the k-th member zero
};

// Right:  A^{<k+1>} = A^{<k>} <> A
// Left:   A^{{k+1}} = A <> A^{{k}}
// Full:   A^{k+1}   = sum_{g=1}^{k} A^g <> A^{k+1-g}
// Computed until zero, stabilization (two equal consecutive terms) or max_k
// terms; the chains are weakly decreasing for any two-op tensor.
inline SeriesResult series(const TwoOpAlgebra& t, SeriesKind kind, int max_k) {
    SeriesResult out{kind, {}, std::nullopt};
    Subspace full = Subspace::full(t.dim);
    out.terms.push_back(full);
    if (full.is_zero()) { // dim 0
        out.nilindex = 1;
        return out;
    }
    while (static_cast<int>(out.terms.size()) < max_k) {
        Subspace next = Subspace::zero(t.dim);
        int k = static_cast<int>(out.terms.size());
        switch (kind) {
            case SeriesKind::Right:
                next = subspace_product(t, out.terms.back(), full);
                break;
            case SeriesKind::Left:
                next = subspace_product(t, full, out.terms.back());
                break;
            case SeriesKind::Full:
                for (int g = 1; g <= k; ++g)
                    next = subspace_sum(next,
                                        subspace_product(t, out.terms[static_cast<size_t>(g - 1)],
                                                         out.terms[static_cast<size_t>(k - g)]));
                break;
        }
        bool stable = next == out.terms.back();
        out.terms.push_back(std::move(next));
        if (out.terms.back().is_zero()) {
            out.nilindex = static_cast<int>(out.terms.size());
            break;
        }
        if (stable) break;
    }
    return out;
}

inline std::optional<int> is_nilpotent(const TwoOpAlgebra& t, SeriesKind kind = SeriesKind::Full) {
    return series(t, kind, t.dim + 1).nilindex;
}

// All eight triple products (both nestings, both operations at each slot)
// vanish on basis triples.
inline bool is_2_nilpotent(const TwoOpAlgebra& t) {
    const BilinearOp* ops[2] = {&t.succ, &t.prec};
    for (int i = 0; i < t.dim; ++i)
        for (int j = 0; j < t.dim; ++j)
            for (int k = 0; k < t.dim; ++k)
                for (const BilinearOp* inner : ops)
                    for (const BilinearOp* outer : ops) {
                        Vec ek = unit_vec(t.dim, k), ei = unit_vec(t.dim, i);
                        if (!vec_is_zero(outer->eval(inner->basis_product(i, j), ek))) return false;
                        if (!vec_is_zero(outer->eval(ei, inner->basis_product(j, k)))) return false;
                    }
    return true;
}

// ---------------------------------------------------------------------------
// Centers, ideals, quotients
// ---------------------------------------------------------------------------

// Z(A) = {x : x*y = y*x = 0 for all y}, as the kernel of the stacked
// multiplication maps.
inline Subspace center(const Algebra& a) {
    Matrix m(2 * a.dim * a.dim, a.dim);
    int row = 0;
    for (int j = 0; j < a.dim; ++j)
        for (int k = 0; k < a.dim; ++k) {
            for (int i = 0; i < a.dim; ++i) {
                m(row, i) = a.mul.c(i, j, k);     // (x e_j)_k
                m(row + 1, i) = a.mul.c(j, i, k); // (e_j x)_k
            }
            row += 2;
        }
    return kernel(m);
}

// Z(A) = {x : all four one-sided products with every y vanish}.
inline Subspace center(const TwoOpAlgebra& t) {
    Matrix m(4 * t.dim * t.dim, t.dim);
    int row = 0;
    for (int j = 0; j < t.dim; ++j)
        for (int k = 0; k < t.dim; ++k) {
            for (int i = 0; i < t.dim; ++i) {
                m(row, i) = t.succ.c(i, j, k);
                m(row + 1, i) = t.prec.c(i, j, k);
                m(row + 2, i) = t.succ.c(j, i, k);
                m(row + 3, i) = t.prec.c(j, i, k);
            }
            row += 4;
        }
    return kernel(m);
}

// Closure of s under all four one-sided products with arbitrary elements.
inline bool is_ideal(const TwoOpAlgebra& t, const Subspace& s) {
    if (s.ambient() != t.dim) throw DimensionMismatchError("subspace/algebra ambient mismatch");
    for (int a = 0; a < s.dim(); ++a) {
        Vec v = s.basis_vector(a);
        for (int j = 0; j < t.dim; ++j) {
            Vec ej = unit_vec(t.dim, j);
            if (!s.contains(t.succ.eval(v, ej)) || !s.contains(t.prec.eval(v, ej)) ||
                !s.contains(t.succ.eval(ej, v)) || !s.contains(t.prec.eval(ej, v)))
                return false;
        }
    }
    return true;
}

namespace detail {

// Quotient tensor in the complement coordinates of z (non-pivot columns).
inline BilinearOp quotient_tensor(const BilinearOp& op, const Subspace& z,
                                  const std::vector<int>& comp) {
    int qd = static_cast<int>(comp.size());
    BilinearOp q(qd);
    for (int a = 0; a < qd; ++a)
        for (int b = 0; b < qd; ++b) {
            Vec w = z.reduce(op.basis_product(comp[static_cast<size_t>(a)], comp[static_cast<size_t>(b)]));
            for (int k = 0; k < qd; ++k) q.c(a, b, k) = w[static_cast<size_t>(comp[static_cast<size_t>(k)])];
        }
    return q;
}

inline std::vector<int> complement_indices(const Subspace& z) {
    std::vector<bool> pivot(static_cast<size_t>(z.ambient()), false);
    for (int r = 0; r < z.dim(); ++r) pivot[static_cast<size_t>(z.pivot_column(r))] = true;
    std::vector<int> comp;
    for (int c = 0; c < z.ambient(); ++c)
        if (!pivot[static_cast<size_t>(c)]) comp.push_back(c);
    return comp;
}

} // namespace detail

// Quotient by the center, defined when the rhizaform center and the center of
// the sum algebra agree; the result is re-verified to be rhizaform and to
// commute with taking sums.
inline TwoOpAlgebra quotient_by_center(const TwoOpAlgebra& t) {
    if (!is_rhizaform(t))
        throw PreconditionError("quotient_by_center requires a rhizaform input");
    Subspace z = center(t);
    if (z != center(sum_operation(t)))
        throw CenterMismatchError("rhizaform center differs from the sum algebra center");
    std::vector<int> comp = detail::complement_indices(z);
    TwoOpAlgebra q(static_cast<int>(comp.size()), detail::quotient_tensor(t.succ, z, comp),
                   detail::quotient_tensor(t.prec, z, comp));
    if (!is_rhizaform(q))
        throw PostconditionError("quotient structure failed the rhizaform check");
    if (sum_operation(q).mul != detail::quotient_tensor(sum_operation(t).mul, z, comp))
        throw PostconditionError("quotient does not commute with the sum operation");
    return q;
}

// ---------------------------------------------------------------------------
// Dimension-2 canonical forms and classification
// ---------------------------------------------------------------------------

struct CanonicalClass2 {
    enum class Tag { Rh1, Rh2, Rh3 };
    Tag tag;
    std::optional<Scalar> lambda; // present iff tag == Rh2
    Matrix witness;               // invertible; witness-transport of the input IS the representative
};

inline std::string to_string(CanonicalClass2::Tag tag) {
    switch (tag) {
        case CanonicalClass2::Tag::Rh1: return "Rh1";
        case CanonicalClass2::Tag::Rh2: return "Rh2";
        case CanonicalClass2::Tag::Rh3: return "Rh3";
    }
    return "?";
}

inline TwoOpAlgebra class2_representative(CanonicalClass2::Tag tag,
                                          const Scalar& lambda = Scalar(0)) {
    TwoOpAlgebra t(2);
    switch (tag) {
        case CanonicalClass2::Tag::Rh1:
            t.prec.c(0, 0, 1) = Scalar(1);
            break;
        case CanonicalClass2::Tag::Rh2:
            t.succ.c(0, 0, 1) = Scalar(1);
            t.prec.c(0, 0, 1) = lambda;
            break;
        case CanonicalClass2::Tag::Rh3:
            break;
    }
    return t;
}

namespace detail {

// First standard basis vector with v.v nonzero under op; for the shapes
// arising from 2-dim rhizaform algebras one always exists when op != 0.
inline std::optional<int> basis_square_index(const BilinearOp& op) {
    for (int i = 0; i < op.dim(); ++i)
        if (!vec_is_zero(op.basis_product(i, i))) return i;
    return std::nullopt;
}

} // namespace detail

// Canonical class of a 2-dimensional rhizaform algebra, with an explicit
// invertible witness mapping the input tensor onto the representative
// bit-exactly. For Rh2 the parameter lambda is the isomorphism invariant.
inline CanonicalClass2 canon2(const TwoOpAlgebra& t) {
    if (t.dim != 2) throw PreconditionError("canon2 requires dimension 2");
    if (!is_rhizaform(t)) throw PreconditionError("canon2 requires a rhizaform input");

    if (t.is_zero())
        return {CanonicalClass2::Tag::Rh3, std::nullopt, Matrix::identity(2)};

    BilinearOp sum = t.succ + t.prec;
    const BilinearOp& probe = sum.is_zero() ? t.succ : sum;
    auto vi = detail::basis_square_index(probe);
    if (!vi) throw PostconditionError("canon2: no basis vector with nonzero square");
    Vec v = unit_vec(2, *vi);
    Vec w = probe.eval(v, v);
    Matrix p(2, 2);
    for (int r = 0; r < 2; ++r) {
        p(r, 0) = v[static_cast<size_t>(r)];
        p(r, 1) = w[static_cast<size_t>(r)];
    }
    if (determinant(p).is_zero())
        throw PostconditionError("canon2: square is dependent on its root");
    Matrix witness = invert(p);
    TwoOpAlgebra moved = t.transported(witness);

    CanonicalClass2 out{CanonicalClass2::Tag::Rh3, std::nullopt, witness};
    if (sum.is_zero()) {
        out.tag = CanonicalClass2::Tag::Rh2;
        out.lambda = Scalar(-1);
    } else {
        Scalar gamma = moved.succ.c(0, 0, 1);
        if (gamma.is_zero()) {
            out.tag = CanonicalClass2::Tag::Rh1;
        } else {
            out.tag = CanonicalClass2::Tag::Rh2;
            out.lambda = (Scalar(1) - gamma) / gamma;
            Matrix q = Matrix::identity(2);
            q(1, 1) = gamma.inverse();
            out.witness = q * witness;
            moved = t.transported(out.witness);
        }
    }
    if (moved != class2_representative(out.tag, out.lambda.value_or(Scalar(0))))
        throw PostconditionError("canon2 witness does not reproduce the representative");
    return out;
}

struct Iso2Result {
    std::optional<Matrix> witness;
    std::string distinguishing_invariant; // set when absent
};

// Exact isomorphism decision in dimension 2 via canonical forms; the lambda
// ratio separates Rh2 classes (established once by the parametric
// intertwiner solve in the test suite).
inline Iso2Result iso2(const TwoOpAlgebra& t1, const TwoOpAlgebra& t2) {
    CanonicalClass2 c1 = canon2(t1);
    CanonicalClass2 c2 = canon2(t2);
    if (c1.tag != c2.tag) return {std::nullopt, "canonical class tag"};
    if (c1.tag == CanonicalClass2::Tag::Rh2 && *c1.lambda != *c2.lambda)
        return {std::nullopt, "lambda"};
    Matrix phi = invert(c2.witness) * c1.witness;
    if (t1.transported(phi) != t2)
        throw PostconditionError("iso2 witness does not intertwine");
    return {phi, ""};
}

// ---------------------------------------------------------------------------
// Parametric solves and the dimension-2 classification
// ---------------------------------------------------------------------------

struct ParametricSolve {
    std::vector<Poly> system;
    std::vector<SolutionFamily> families;
};

// Solutions of the rhizaform axioms among structures summing to the given
// multiplication: succ entries are variables (slot order of SymTensor),
// prec = mul - succ.
inline ParametricSolve compatible_rhizaform_families(const Algebra& a) {
    SymTensor succ = SymTensor::variables(a.dim, 0);
    SymTensor prec = SymTensor::constants(a.mul) - succ;
    ParametricSolve out;
    out.system = rhizaform_system(succ, prec);
    out.families = PolySolver::solve(out.system);
    for (const auto& f : out.families)
        if (!family_solves(out.system, f))
            throw PostconditionError("parametric solve produced a non-solution family");
    return out;
}

// Fully free solve: succ vars then prec vars.
inline ParametricSolve free_rhizaform_families(int dim) {
    int nv = SymTensor::slot_count(dim);
    SymTensor succ = SymTensor::variables(dim, 0);
    SymTensor prec = SymTensor::variables(dim, nv);
    ParametricSolve out;
    out.system = rhizaform_system(succ, prec);
    out.families = PolySolver::solve(out.system);
    for (const auto& f : out.families)
        if (!family_solves(out.system, f))
            throw PostconditionError("parametric solve produced a non-solution family");
    return out;
}

// Deterministic sample of a family respecting its nonzero side conditions.
// Returns assignments for vars [0, nvars); prefers `preferred` for free vars.
inline std::optional<std::vector<Scalar>> sample_family(const SolutionFamily& fam, int nvars,
                                                        const Scalar& preferred) {
    std::vector<Scalar> candidates{preferred, Scalar(1), Scalar(-1), Scalar(2),
                                   Scalar::rational(1, 2), Scalar(3), Scalar(-2)};
    std::vector<int> free_vars;
    for (int v = 0; v < nvars; ++v)
        if (!fam.solved.count(v)) free_vars.push_back(v);
    size_t ncand = candidates.size();
    size_t attempts = 1;
    for (size_t i = 0; i < free_vars.size() && i < 4; ++i) attempts *= ncand;
    for (size_t at = 0; at < attempts; ++at) {
        std::vector<Scalar> vals(static_cast<size_t>(nvars));
        size_t code = at;
        for (size_t i = 0; i < free_vars.size(); ++i) {
            vals[static_cast<size_t>(free_vars[i])] = candidates[code % ncand];
            code /= ncand;
        }
        bool ok = true;
        try {
            for (const auto& [v, e] : fam.solved) vals[static_cast<size_t>(v)] = e.evaluate(vals);
        } catch (const Error&) {
            ok = false; // a denominator vanished at this assignment
        }
        for (const auto& c : fam.nonzero) {
            if (!ok) break;
            if (c.evaluate(vals).is_zero()) ok = false;
        }
        if (ok) return vals;
    }
    return std::nullopt;
}

struct ClassDescriptor {
    CanonicalClass2::Tag tag;
    std::optional<Scalar> lambda; // concrete value when fixed by the case
    std::string note;
};

struct Classification2 {
    ParametricSolve nonabelian;     // compatible structures on e1*e1 = e2
    ParametricSolve abelian;        // compatible structures on the zero product
    SolutionFamily gamma_family;    // e1>e1 = g e2, e1<e1 = (1-g) e2
    std::vector<ClassDescriptor> classes;
};

// The two-dimensional classification: parametric solves over both
// anti-associative isomorphism classes, verified against the expected
// families and canonicalized via canon2.
inline Classification2 classify2() {
    Classification2 out;

    Algebra nonab(2);
    nonab.mul.c(0, 0, 1) = Scalar(1);
    out.nonabelian = compatible_rhizaform_families(nonab);

    int gamma_var = SymTensor::slot(2, 0, 0, 1);
    for (int v = 0; v < SymTensor::slot_count(2); ++v)
        if (v != gamma_var) out.gamma_family.solved[v] = RatExpr{};
    if (!family_solves(out.nonabelian.system, out.gamma_family))
        throw PostconditionError("gamma family does not solve the nonabelian system");
    for (const auto& fam : out.nonabelian.families)
        for (int v = 0; v < SymTensor::slot_count(2); ++v)
            if (v != gamma_var && !fam.expression_of(v).is_zero())
                throw PostconditionError("nonabelian solve escapes the gamma family");

    Algebra ab(2);
    out.abelian = compatible_rhizaform_families(ab);
    bool saw_rh2_m1 = false, saw_rh3 = false;
    for (const auto& fam : out.abelian.families) {
        for (const Scalar& pref : {Scalar(1), Scalar(2), Scalar(0)}) {
            auto vals = sample_family(fam, SymTensor::slot_count(2), pref);
            if (!vals) continue;
            TwoOpAlgebra t(2);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    for (int k = 0; k < 2; ++k) {
                        Scalar s = (*vals)[static_cast<size_t>(SymTensor::slot(2, i, j, k))];
                        t.succ.c(i, j, k) = s;
                        t.prec.c(i, j, k) = -s;
                    }
            CanonicalClass2 c = canon2(t);
            if (c.tag == CanonicalClass2::Tag::Rh2) {
                if (*c.lambda != Scalar(-1))
                    throw PostconditionError("abelian case produced a non-(-1) lambda");
                saw_rh2_m1 = true;
            } else if (c.tag == CanonicalClass2::Tag::Rh3) {
                saw_rh3 = true;
            } else {
                throw PostconditionError("abelian case produced an Rh1 class");
            }
        }
    }
    if (!saw_rh2_m1 || !saw_rh3)
        throw PostconditionError("abelian case did not realize both expected classes");

    out.classes = {
        {CanonicalClass2::Tag::Rh1, std::nullopt, "gamma = 0 in the nonabelian family"},
        {CanonicalClass2::Tag::Rh2, std::nullopt,
         "lambda = (1-gamma)/gamma over the nonabelian sum; lambda != -1"},
        {CanonicalClass2::Tag::Rh2, Scalar(-1), "abelian sum"},
        {CanonicalClass2::Tag::Rh3, std::nullopt, "zero algebra"},
    };
    return out;
}

} // namespace rhiza
