#pragma once

#include <vector>

#include "rhiza/identities.hpp"
#include "rhiza/poly.hpp"

namespace rhiza {

// Structure-constant tensor with polynomial entries; feeds the same residual
// kernels as the exact checkers, so the solved systems are the axioms
// themselves rather than a re-derivation.
struct SymTensor {
    int dim = 0;
    std::vector<Poly> c;

    explicit SymTensor(int d) : dim(d), c(static_cast<size_t>(d) * d * d) {}

    Poly& at(int i, int j, int k) { return c[idx(i, j, k)]; }
    const Poly& at(int i, int j, int k) const { return c[idx(i, j, k)]; }

    static SymTensor variables(int dim, int first_var) {
        SymTensor t(dim);
        for (size_t s = 0; s < t.c.size(); ++s) t.c[s] = Poly::var(first_var + static_cast<int>(s));
        return t;
    }

    static SymTensor constants(const BilinearOp& op) {
        SymTensor t(op.dim());
        for (int i = 0; i < op.dim(); ++i)
            for (int j = 0; j < op.dim(); ++j)
                for (int k = 0; k < op.dim(); ++k) t.at(i, j, k) = Poly::constant(op.c(i, j, k));
        return t;
    }

    SymTensor operator-(const SymTensor& o) const {
        SymTensor t(dim);
        for (size_t s = 0; s < c.size(); ++s) t.c[s] = c[s] - o.c[s];
        return t;
    }

    SymTensor operator-() const {
        SymTensor t(dim);
        for (size_t s = 0; s < c.size(); ++s) t.c[s] = -c[s];
        return t;
    }

    // Number of variables used by variables(dim, first) layouts.
    static int slot_count(int dim) { return dim * dim * dim; }
    static int slot(int dim, int i, int j, int k) { return (i * dim + j) * dim + k; }

  private:
    size_t idx(int i, int j, int k) const {
        return (static_cast<size_t>(i) * dim + static_cast<size_t>(j)) * dim + static_cast<size_t>(k);
    }
};

// All components of the three rhizaform axiom residuals over all basis
// triples, as one polynomial system.
inline std::vector<Poly> rhizaform_system(const SymTensor& succ, const SymTensor& prec) {
    int dim = succ.dim;
    auto s = [&succ](int i, int j, int k) { return succ.at(i, j, k); };
    auto p = [&prec](int i, int j, int k) { return prec.at(i, j, k); };
    std::vector<Poly> sys;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                for (auto& r : rhiza_succ_residual<Poly>(dim, s, p, i, j, k)) sys.push_back(std::move(r));
                for (auto& r : rhiza_prec_residual<Poly>(dim, s, p, i, j, k)) sys.push_back(std::move(r));
                for (auto& r : rhiza_mixed_residual<Poly>(dim, s, p, i, j, k)) sys.push_back(std::move(r));
            }
    return sys;
}

// Rota-Baxter residuals for a symbolic operator matrix on a fixed algebra.
// Entries use the column-as-image convention: var_of(p, q) is the e_p
// coefficient of the image of e_q.
inline std::vector<Poly> rota_baxter_system(const Algebra& a,
                                            const std::vector<std::vector<Poly>>& r) {
    int n = a.dim;
    std::vector<Poly> sys;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            // w(q) = sum_p r(p,i) c(p,j,q) + r(p,j) c(i,p,q)
            std::vector<Poly> w(static_cast<size_t>(n));
            for (int q = 0; q < n; ++q)
                for (int p = 0; p < n; ++p)
                    w[static_cast<size_t>(q)] =
                        w[static_cast<size_t>(q)] +
                        r[static_cast<size_t>(p)][static_cast<size_t>(i)].scaled(a.mul.c(p, j, q)) +
                        r[static_cast<size_t>(p)][static_cast<size_t>(j)].scaled(a.mul.c(i, p, q));
            for (int m = 0; m < n; ++m) {
                Poly lhs;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q)
                        if (!a.mul.c(p, q, m).is_zero())
                            lhs = lhs + (r[static_cast<size_t>(p)][static_cast<size_t>(i)] *
                                         r[static_cast<size_t>(q)][static_cast<size_t>(j)])
                                            .scaled(a.mul.c(p, q, m));
                Poly rhs;
                for (int q = 0; q < n; ++q)
                    rhs = rhs + r[static_cast<size_t>(m)][static_cast<size_t>(q)] * w[static_cast<size_t>(q)];
                sys.push_back(lhs - rhs);
            }
        }
    return sys;
}

// Intertwining equations for a symbolic map P between two concrete two-op
// algebras: P(x op1 y) = P(x) op2 P(y) for both operations.
inline std::vector<Poly> intertwiner_system(const TwoOpAlgebra& t1, const TwoOpAlgebra& t2,
                                            const std::vector<std::vector<Poly>>& p) {
    int n = t1.dim;
    std::vector<Poly> sys;
    for (const auto* ops : {&t1.succ, &t1.prec}) {
        const BilinearOp& op1 = *ops;
        const BilinearOp& op2 = (ops == &t1.succ) ? t2.succ : t2.prec;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m) {
                    Poly lhs;
                    for (int q = 0; q < n; ++q)
                        lhs = lhs + p[static_cast<size_t>(m)][static_cast<size_t>(q)].scaled(op1.c(i, j, q));
                    Poly rhs;
                    for (int q = 0; q < n; ++q)
                        for (int s = 0; s < n; ++s)
                            if (!op2.c(q, s, m).is_zero())
                                rhs = rhs + (p[static_cast<size_t>(q)][static_cast<size_t>(i)] *
                                             p[static_cast<size_t>(s)][static_cast<size_t>(j)])
                                                .scaled(op2.c(q, s, m));
                    sys.push_back(lhs - rhs);
                }
    }
    return sys;
}

// Substitutes a solution family into a system; every residual must come back
// as the zero polynomial for the family to be a genuine solution manifold.
// Denominators of rational entries are nonzero on the family, so clearing
// them preserves vanishing.
inline bool family_solves(const std::vector<Poly>& sys, const SolutionFamily& fam) {
    for (const Poly& p : sys) {
        Poly q = p;
        for (const auto& [v, e] : fam.solved) q = q.substitute_cleared(v, e.num, e.den);
        if (!q.is_zero()) return false;
    }
    return true;
}

} // namespace rhiza
