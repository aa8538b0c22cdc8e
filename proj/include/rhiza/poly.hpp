#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rhiza/scalar.hpp"

namespace rhiza {

// Sparse multivariate polynomial over Q(i). Exponent vectors are trimmed of
// trailing zeros, so a polynomial carries no fixed arity and the zero
// polynomial is universal. Small systems only; no attempt at asymptotics.
class Poly {
  public:
    using Exps = std::vector<unsigned char>;

    Poly() = default;

    static Poly constant(Scalar c) {
        Poly p;
        if (!c.is_zero()) p.terms_[{}] = std::move(c);
        return p;
    }

    static Poly var(int v) {
        if (v < 0) throw Error("negative variable index");
        Poly p;
        Exps e(static_cast<size_t>(v) + 1, 0);
        e[static_cast<size_t>(v)] = 1;
        p.terms_[std::move(e)] = Scalar(1);
        return p;
    }

    const std::map<Exps, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Scalar constant_value() const {
        if (terms_.empty()) return Scalar(0);
        return terms_.begin()->second;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }

    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) {
                Exps e(std::max(e1.size(), e2.size()), 0);
                for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
                for (size_t i = 0; i < e2.size(); ++i) e[i] = static_cast<unsigned char>(e[i] + e2[i]);
                r.add_term(trim(std::move(e)), c1 * c2);
            }
        return r;
    }

    Poly scaled(const Scalar& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [e, co] : terms_) r.terms_[e] = c * co;
        return r;
    }

    std::set<int> vars() const {
        std::set<int> out;
        for (const auto& [e, c] : terms_)
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) out.insert(static_cast<int>(i));
        return out;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int t = 0;
            for (auto x : e) t += x;
            d = std::max(d, t);
        }
        return d;
    }

    int degree_in(int v) const {
        int d = 0;
        for (const auto& [e, c] : terms_)
            if (static_cast<size_t>(v) < e.size()) d = std::max(d, static_cast<int>(e[static_cast<size_t>(v)]));
        return d;
    }

    // If the polynomial is C*x_v + rest with rest free of x_v and C a single
    // monomial, return (C, rest). C constant corresponds to plain linear
    // elimination; C a monomial in nonzero-assumed variables to elimination
    // in the localized ring.
    std::optional<std::pair<Poly, Poly>> linear_part(int v) const {
        Poly coeff;
        Poly rest;
        for (const auto& [e, c] : terms_) {
            int ev = static_cast<size_t>(v) < e.size() ? e[static_cast<size_t>(v)] : 0;
            if (ev == 0) {
                rest.add_term(e, c);
            } else if (ev == 1) {
                Exps e2 = e;
                e2[static_cast<size_t>(v)] = 0;
                coeff.add_term(trim(std::move(e2)), c);
            } else {
                return std::nullopt;
            }
        }
        if (coeff.is_zero() || !coeff.is_monomial()) return std::nullopt;
        return std::make_pair(coeff, rest);
    }

    // Substitute x_v := num/den and clear denominators: with D = deg_v(this),
    // returns sum_d coeff_d * num^d * den^(D-d), which vanishes exactly where
    // the original does as long as den != 0.
    Poly substitute_cleared(int v, const Poly& num, const Poly& den) const {
        int dmax = degree_in(v);
        if (dmax == 0) return *this;
        std::vector<Poly> num_pow{Poly::constant(Scalar(1))};
        std::vector<Poly> den_pow{Poly::constant(Scalar(1))};
        for (int d = 1; d <= dmax; ++d) {
            num_pow.push_back(num_pow.back() * num);
            den_pow.push_back(den_pow.back() * den);
        }
        Poly out;
        for (const auto& [e, c] : terms_) {
            int ev = static_cast<size_t>(v) < e.size() ? e[static_cast<size_t>(v)] : 0;
            Exps e2 = e;
            if (ev > 0) e2[static_cast<size_t>(v)] = 0;
            Poly base;
            base.terms_[trim(std::move(e2))] = c;
            out = out + base * num_pow[static_cast<size_t>(ev)] * den_pow[static_cast<size_t>(dmax - ev)];
        }
        return out;
    }

    bool divisible_by_var(int v) const {
        if (terms_.empty()) return false;
        for (const auto& [e, c] : terms_)
            if (static_cast<size_t>(v) >= e.size() || e[static_cast<size_t>(v)] == 0) return false;
        return true;
    }

    Poly divided_by_var(int v) const {
        Poly r;
        for (const auto& [e, c] : terms_) {
            Exps e2 = e;
            e2[static_cast<size_t>(v)] -= 1;
            r.terms_[trim(std::move(e2))] = c;
        }
        return r;
    }

    Poly substitute(int v, const Poly& rep) const {
        Poly out;
        std::vector<Poly> powers{Poly::constant(Scalar(1))};
        for (const auto& [e, c] : terms_) {
            int ev = static_cast<size_t>(v) < e.size() ? e[static_cast<size_t>(v)] : 0;
            Exps e2 = e;
            if (ev > 0) e2[static_cast<size_t>(v)] = 0;
            Poly base;
            base.terms_[trim(std::move(e2))] = c;
            while (static_cast<int>(powers.size()) <= ev) powers.push_back(powers.back() * rep);
            out = out + base * powers[static_cast<size_t>(ev)];
        }
        return out;
    }

    Scalar evaluate(const std::vector<Scalar>& vals) const {
        Scalar out(0);
        for (const auto& [e, c] : terms_) {
            Scalar t = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) t *= vals.at(i);
            out += t;
        }
        return out;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += c.str();
            for (size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                out += "*";
                out += i < names.size() ? names[i] : "x" + std::to_string(i);
                if (e[i] > 1) out += "^" + std::to_string(static_cast<int>(e[i]));
            }
        }
        return out;
    }

  private:
    static Exps trim(Exps e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
        return e;
    }

    void add_term(const Exps& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    std::map<Exps, Scalar> terms_;
};

// Rational expression num/den with den a monomial in variables assumed
// nonzero on the branch that produced it.
struct RatExpr {
    Poly num;
    Poly den = Poly::constant(Scalar(1));

    bool is_zero() const { return num.is_zero(); }

    Scalar evaluate(const std::vector<Scalar>& vals) const {
        Scalar d = den.evaluate(vals);
        if (d.is_zero()) throw Error("rational expression denominator vanished");
        return num.evaluate(vals) / d;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (den.is_constant() && den.constant_value().is_one()) return num.str(names);
        return "(" + num.str(names) + ")/(" + den.str(names) + ")";
    }
};

// One leaf of the case-split elimination: every listed variable is expressed
// in the remaining free variables, subject to the nonzero side conditions.
struct SolutionFamily {
    std::map<int, RatExpr> solved;
    std::vector<Poly> nonzero; // each of these must evaluate nonzero

    RatExpr expression_of(int v) const {
        auto it = solved.find(v);
        if (it != solved.end()) return it->second;
        return RatExpr{Poly::var(v)};
    }
};

// Exact solver for the small polynomial systems arising from the axiom
// tensors: constant-coefficient linear substitution, plus zero/nonzero case
// splits on variables when no linear step applies. The case tree covers the
// whole variety, so the union of leaves is the exact solution set.
class PolySolver {
  public:
    static std::vector<SolutionFamily> solve(std::vector<Poly> eqs) {
        std::vector<SolutionFamily> out;
        State st;
        st.eqs = std::move(eqs);
        size_t budget = 100000;
        run(std::move(st), out, budget);
        return out;
    }

  private:
    struct State {
        std::vector<Poly> eqs;
        std::map<int, RatExpr> solved;
        std::set<int> assumed; // variables assumed nonzero
        std::vector<Poly> nonzero;
    };

    static void run(State st, std::vector<SolutionFamily>& out, size_t& budget) {
        if (budget-- == 0) throw Error("polynomial solver budget exceeded");
        for (;;) {
            // normalize
            std::vector<Poly> eqs;
            for (auto& p : st.eqs) {
                if (p.is_zero()) continue;
                if (p.is_constant()) return; // nonzero constant: no solutions
                eqs.push_back(std::move(p));
            }
            st.eqs = std::move(eqs);
            for (const auto& p : st.nonzero)
                if (p.is_zero()) return; // violated side condition

            if (st.eqs.empty()) {
                SolutionFamily fam;
                fam.solved = st.solved;
                for (const auto& p : st.nonzero)
                    if (!p.is_constant()) fam.nonzero.push_back(p);
                out.push_back(std::move(fam));
                return;
            }

            // eliminate a variable appearing linearly with constant coefficient
            bool progressed = false;
            for (const auto& p : st.eqs) {
                for (int v : p.vars()) {
                    auto lin = p.linear_part(v);
                    if (!lin || !lin->first.is_constant()) continue;
                    apply_substitution(st, v, RatExpr{lin->second.scaled(-(lin->first.constant_value().inverse()))});
                    progressed = true;
                    break;
                }
                if (progressed) break;
            }
            if (progressed) continue;

            // divide out assumed-nonzero variables
            for (auto& p : st.eqs) {
                for (int v : st.assumed) {
                    while (p.divisible_by_var(v)) {
                        p = p.divided_by_var(v);
                        progressed = true;
                    }
                }
            }
            if (progressed) continue;

            // monomial equation: some variable in it must vanish
            for (const auto& p : st.eqs) {
                if (!p.is_monomial()) continue;
                std::vector<int> candidates;
                for (int v : p.vars())
                    if (!st.assumed.count(v)) candidates.push_back(v);
                if (candidates.empty()) return; // product of nonzeros cannot vanish
                if (candidates.size() == 1) {
                    apply_substitution(st, candidates[0], RatExpr{});
                } else {
                    branch(st, candidates[0], out, budget);
                    return;
                }
                progressed = true;
                break;
            }
            if (progressed) continue;

            // common variable factor
            for (const auto& p : st.eqs) {
                for (int v : p.vars()) {
                    if (st.assumed.count(v)) continue;
                    if (p.divisible_by_var(v)) {
                        branch(st, v, out, budget);
                        return;
                    }
                }
            }

            // eliminate in the localized ring: variable appearing linearly
            // whose coefficient is a monomial in nonzero-assumed variables
            for (const auto& p : st.eqs) {
                for (int v : p.vars()) {
                    auto lin = p.linear_part(v);
                    if (!lin) continue;
                    bool invertible = true;
                    for (int cv : lin->first.vars())
                        if (!st.assumed.count(cv)) { invertible = false; break; }
                    if (!invertible) continue;
                    apply_substitution(st, v, RatExpr{-lin->second, lin->first});
                    progressed = true;
                    break;
                }
                if (progressed) break;
            }
            if (progressed) continue;

            // last resort: case split on the first free variable around
            for (const auto& p : st.eqs)
                for (int v : p.vars())
                    if (!st.assumed.count(v)) {
                        branch(st, v, out, budget);
                        return;
                    }

            std::string dump = "polynomial solver is stuck:";
            for (const auto& p : st.eqs) dump += "\n  " + p.str();
            dump += "\n assumed:";
            for (int v : st.assumed) dump += " x" + std::to_string(v);
            throw Error(dump);
        }
    }

    static void branch(const State& st, int v, std::vector<SolutionFamily>& out, size_t& budget) {
        State zero = st;
        apply_substitution(zero, v, RatExpr{});
        run(std::move(zero), out, budget);
        State nz = st;
        nz.assumed.insert(v);
        nz.nonzero.push_back(Poly::var(v));
        run(std::move(nz), out, budget);
    }

    // v := repl everywhere; equations and side conditions are cleared of the
    // (nonzero) denominator, which preserves their zero sets on the branch.
    static void apply_substitution(State& st, int v, const RatExpr& repl) {
        for (auto& p : st.eqs) p = p.substitute_cleared(v, repl.num, repl.den);
        for (auto& [w, e] : st.solved) {
            int dn = e.num.degree_in(v);
            int dd = e.den.degree_in(v);
            Poly num2 = e.num.substitute_cleared(v, repl.num, repl.den);
            Poly den2 = e.den.substitute_cleared(v, repl.num, repl.den);
            // num/den = (num2/repl.den^dn) / (den2/repl.den^dd)
            Poly shift = Poly::constant(Scalar(1));
            for (int k = 0; k < dd; ++k) shift = shift * repl.den;
            Poly shift2 = Poly::constant(Scalar(1));
            for (int k = 0; k < dn; ++k) shift2 = shift2 * repl.den;
            e = RatExpr{num2 * shift, den2 * shift2};
        }
        for (auto& p : st.nonzero) p = p.substitute_cleared(v, repl.num, repl.den);
        st.solved[v] = repl;
    }
};

} // namespace rhiza
