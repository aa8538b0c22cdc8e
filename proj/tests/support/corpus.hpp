#pragma once

// Shared instance corpus for the property and acceptance suites: the
// classification representatives, gamma-family members, direct sums,
// constructed zero-sum instances, operator-induced structures and
// hat-double-based structures, all exact and all verified rhizaform at
// construction time.

#include <random>
#include <string>
#include <vector>

#include "rhiza/cocycle.hpp"
#include "rhiza/operators.hpp"
#include "rhiza/structure.hpp"

namespace rhiza::testsupport {

struct Instance {
    std::string name;
    TwoOpAlgebra t;
};

inline TwoOpAlgebra rh2(const Scalar& lambda) {
    return class2_representative(CanonicalClass2::Tag::Rh2, lambda);
}

inline TwoOpAlgebra gamma_member(const Scalar& gamma) {
    TwoOpAlgebra t(2);
    t.succ.c(0, 0, 1) = gamma;
    t.prec.c(0, 0, 1) = Scalar(1) - gamma;
    return t;
}

// Products of the first block land in an annihilated tail subspace and the
// two operations cancel, which satisfies the axioms with a zero sum tensor.
inline TwoOpAlgebra zero_sum_instance(int dim, int image_start,
                                      const std::vector<std::vector<Scalar>>& coeffs) {
    TwoOpAlgebra t(dim);
    for (int i = 0; i < image_start; ++i)
        for (int j = 0; j < image_start; ++j)
            for (int k = image_start; k < dim; ++k) {
                Scalar c = coeffs[static_cast<size_t>(i * image_start + j)]
                                 [static_cast<size_t>(k - image_start)];
                t.succ.c(i, j, k) = c;
                t.prec.c(i, j, k) = -c;
            }
    return t;
}

inline Algebra nonabelian2() {
    Algebra a(2);
    a.mul.c(0, 0, 1) = Scalar(1);
    return a;
}

inline std::vector<Instance> rhizaform_corpus() {
    std::vector<Instance> out;
    auto add = [&out](std::string name, TwoOpAlgebra t) {
        if (!is_rhizaform(t)) throw Error("corpus instance is not rhizaform: " + name);
        out.push_back({std::move(name), std::move(t)});
    };

    // classification representatives
    add("Rh1", class2_representative(CanonicalClass2::Tag::Rh1));
    add("Rh3", class2_representative(CanonicalClass2::Tag::Rh3));
    std::vector<Scalar> lambdas{Scalar(0),
                                Scalar(1),
                                Scalar(-1),
                                Scalar(2),
                                Scalar::rational(-1, 2),
                                Scalar::rational(1, 2),
                                Scalar(3),
                                Scalar::rational(-4, 3),
                                Scalar(5),
                                Scalar(-3)};
    for (const Scalar& l : lambdas) add("Rh2[" + l.str() + "]", rh2(l));

    // gamma-family members, including one over Q(i)
    for (const Scalar& g : {Scalar::rational(1, 3), Scalar(-2), Scalar::rational(3, 4),
                            Scalar::imaginary_unit()})
        add("gamma[" + g.str() + "]", gamma_member(g));

    // rescaled class members
    TwoOpAlgebra scaled1(2);
    scaled1.prec.c(0, 0, 1) = Scalar(5);
    add("Rh1-scaled", scaled1);
    TwoOpAlgebra scaled2(2);
    scaled2.succ.c(0, 0, 1) = Scalar(2);
    scaled2.prec.c(0, 0, 1) = Scalar(6);
    add("Rh2[3]-scaled", scaled2);

    // dimension 1 and direct sums up to dimension 6
    add("zero-1", TwoOpAlgebra(1));
    add("Rh1+0", direct_sum(class2_representative(CanonicalClass2::Tag::Rh1), TwoOpAlgebra(1)));
    add("Rh2[2]+0", direct_sum(rh2(Scalar(2)), TwoOpAlgebra(1)));
    add("Rh1+Rh2[1]", direct_sum(class2_representative(CanonicalClass2::Tag::Rh1), rh2(Scalar(1))));
    add("Rh1+Rh1+Rh2[-1]",
        direct_sum(class2_representative(CanonicalClass2::Tag::Rh1),
                   direct_sum(class2_representative(CanonicalClass2::Tag::Rh1), rh2(Scalar(-1)))));

    // zero-sum (2-nilpotent) instances in dims 3 and 4
    add("zsum-3", zero_sum_instance(3, 2, {{Scalar(1)}, {Scalar(2)}, {Scalar(0)}, {Scalar(-1)}}));
    add("zsum-4a", zero_sum_instance(4, 2,
                                     {{Scalar(1), Scalar(0)},
                                      {Scalar(0), Scalar(1)},
                                      {Scalar(1), Scalar(-1)},
                                      {Scalar(2), Scalar(0)}}));
    add("zsum-4b", zero_sum_instance(4, 2,
                                     {{Scalar(0), Scalar(1)},
                                      {Scalar::rational(1, 2), Scalar(0)},
                                      {Scalar(0), Scalar(0)},
                                      {Scalar(-3), Scalar(1)}}));

    // Rota-Baxter-induced structures on e1*e1 = e2
    Algebra a2 = nonabelian2();
    for (const Scalar& c : {Scalar(2), Scalar(-2), Scalar(1), Scalar(-1)}) {
        Matrix r(2, 2);
        r(0, 0) = c;
        r(1, 1) = c / Scalar(2);
        add("rb-induced[" + c.str() + "]", rb_induce(a2, r));
    }

    // hat-double-based structures (operator-induced on semidirect products)
    size_t base_count = out.size();
    for (size_t i = 0; i < base_count; ++i) {
        const Instance& inst = out[i];
        if (inst.t.dim > 3) continue;
        auto [amb, ihat] = hat_identity_rb(inst.t);
        add("hatRB(" + inst.name + ")", rb_induce(amb, ihat));
    }

    // O-operators on dual bimodules of the regular bimodule of e1*e1 = e2
    Bimodule dual_reg = dual_bimodule(regular_bimodule(a2));
    int found = 0;
    for (int mask = 0; mask < 81 && found < 4; ++mask) {
        Matrix t(2, 2);
        int code = mask;
        for (int s = 0; s < 4; ++s) {
            t(s / 2, s % 2) = Scalar(code % 3 - 1);
            code /= 3;
        }
        OOperator o(dual_reg, t);
        if (!check_o_operator(o).pass) continue;
        add("dual-oop[" + std::to_string(mask) + "]", induce_on_module(o));
        ++found;
    }

    // embedding-induced structures on semidirect products (dim 4)
    {
        Bimodule rb_rh1 = rhizaform_bimodule(class2_representative(CanonicalClass2::Tag::Rh1));
        OOperator o(rb_rh1, Matrix::identity(2));
        auto [amb, that] = embed_T_hat(o);
        add("embedRB(Rh1)", rb_induce(amb, that));
        Bimodule rb_l = rhizaform_bimodule(rh2(Scalar(2)));
        OOperator o2(rb_l, Matrix::identity(2));
        auto [amb2, that2] = embed_T_hat(o2);
        add("embedRB(Rh2[2])", rb_induce(amb2, that2));
    }

    return out;
}

// Small deterministic rational sampler.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    Scalar rational(int height) {
        std::uniform_int_distribution<int> num(-height, height);
        std::uniform_int_distribution<int> den(1, height);
        return Scalar::rational(num(gen_), den(gen_));
    }

    int index(int n) {
        std::uniform_int_distribution<int> d(0, n - 1);
        return d(gen_);
    }

  private:
    std::mt19937_64 gen_;
};

// Deterministically perturbed copies of corpus instances that fail
// check_rhizaform; `count` of them.
inline std::vector<Instance> violating_corpus(int count, uint64_t seed = 20250810) {
    std::vector<Instance> base = rhizaform_corpus();
    std::vector<Instance> out;
    Rng rng(seed);
    size_t attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        const Instance& src = base[attempts++ % base.size()];
        TwoOpAlgebra t = src.t;
        if (t.dim == 0) continue;
        BilinearOp& op = rng.index(2) == 0 ? t.succ : t.prec;
        Scalar delta = rng.rational(2);
        if (delta.is_zero()) delta = Scalar(1);
        op.c(rng.index(t.dim), rng.index(t.dim), rng.index(t.dim)) += delta;
        if (is_rhizaform(t)) continue;
        out.push_back({src.name + "#perturbed" + std::to_string(out.size()), std::move(t)});
    }
    return out;
}

// Series member A^k (1-based) from a computed series, extending by the
// stabilization/zero tail.
inline const Subspace& series_term(const SeriesResult& s, int k) {
    size_t idx = static_cast<size_t>(k - 1);
    if (idx < s.terms.size()) return s.terms[idx];
    return s.terms.back();
}

} // namespace rhiza::testsupport
