#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

#include "rhiza/errors.hpp"

namespace rhiza {

/*
 * Exact element of Q(i): a pair of arbitrary-precision rationals (real and
 * imaginary part). Plain rationals are the im == 0 case. All arithmetic is
 * exact; values are immutable in spirit (every operation returns a fresh
 * value) and always kept canonical (lowest terms, positive denominator),
 * which mpq_class arithmetic preserves.
 *
 * Text syntax (whitespace-free):  "a/b", "a", "a/b+c/d*i", "c/d*i",
 * optional leading signs, "0" for zero. Serialization is canonical and
 * parse/format round-trips byte-identically.
 */
class Scalar {
  public:
    Scalar() : re_(0), im_(0) {}
    explicit Scalar(long n) : re_(n), im_(0) {}
    Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static Scalar rational(long num, long den) {
        if (den == 0) throw Error("zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Scalar(q, mpq_class(0));
    }
    static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    Scalar operator-() const { return Scalar(mpq_class(-re_), mpq_class(-im_)); }

    Scalar operator+(const Scalar& o) const {
        return Scalar(mpq_class(re_ + o.re_), mpq_class(im_ + o.im_));
    }
    Scalar operator-(const Scalar& o) const {
        return Scalar(mpq_class(re_ - o.re_), mpq_class(im_ - o.im_));
    }
    Scalar operator*(const Scalar& o) const {
        return Scalar(mpq_class(re_ * o.re_ - im_ * o.im_),
                      mpq_class(re_ * o.im_ + im_ * o.re_));
    }
    Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }

    Scalar& operator+=(const Scalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    Scalar& operator-=(const Scalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    Scalar conj() const { return Scalar(re_, mpq_class(-im_)); }

    Scalar inverse() const {
        if (is_zero()) throw Error("division by zero scalar");
        mpq_class n(re_ * re_ + im_ * im_);
        return Scalar(mpq_class(re_ / n), mpq_class(-im_ / n));
    }

    bool operator==(const Scalar& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical-form total order (real part first), used for deterministic
    // enumeration and container keys; not a field order.
    bool operator<(const Scalar& o) const {
        int c = cmp(re_, o.re_);
        if (c != 0) return c < 0;
        return cmp(im_, o.im_) < 0;
    }

    std::string str() const {
        if (im_ == 0) return re_.get_str();
        if (re_ == 0) return im_.get_str() + "*i";
        mpq_class a(abs(im_));
        return re_.get_str() + (im_ > 0 ? "+" : "-") + a.get_str() + "*i";
    }

    static Scalar parse(std::string_view text) {
        if (text.empty()) throw ParseError("empty scalar");
        if (text.size() >= 2 && text.substr(text.size() - 2) == "*i") {
            std::string_view body = text.substr(0, text.size() - 2);
            // Split at the last interior sign, if any: "a/b+c/d*i".
            size_t split = std::string_view::npos;
            for (size_t p = body.size(); p-- > 1;) {
                if (body[p] == '+' || body[p] == '-') { split = p; break; }
            }
            if (split == std::string_view::npos)
                return Scalar(mpq_class(0), parse_rational(body));
            mpq_class re = parse_rational(body.substr(0, split));
            mpq_class im = parse_rational(body.substr(split + 1));
            if (body[split] == '-') im = -im;
            return Scalar(re, im);
        }
        return Scalar(parse_rational(text), mpq_class(0));
    }

  private:
    static mpq_class parse_rational(std::string_view text) {
        if (text.empty()) throw ParseError("empty rational");
        bool neg = false;
        size_t pos = 0;
        if (text[0] == '+' || text[0] == '-') {
            neg = text[0] == '-';
            pos = 1;
        }
        size_t slash = text.find('/', pos);
        mpz_class num = parse_integer(text.substr(pos, slash == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : slash - pos));
        mpz_class den(1);
        if (slash != std::string_view::npos) {
            den = parse_integer(text.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        }
        mpq_class q(num, den);
        q.canonicalize();
        if (neg) q = -q;
        return q;
    }

    static mpz_class parse_integer(std::string_view digits) {
        if (digits.empty()) throw ParseError("missing digits in rational");
        for (char ch : digits)
            if (ch < '0' || ch > '9')
                throw ParseError("invalid character in rational: '" + std::string(digits) + "'");
        return mpz_class(std::string(digits), 10);
    }

    mpq_class re_;
    mpq_class im_;
};

using Vec = std::vector<Scalar>;

inline bool vec_is_zero(const Vec& v) {
    for (const auto& s : v)
        if (!s.is_zero()) return false;
    return true;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector sizes differ");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatchError("vector sizes differ");
    Vec out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

inline Vec unit_vec(int n, int i) {
    Vec v(static_cast<size_t>(n));
    v[static_cast<size_t>(i)] = Scalar(1);
    return v;
}

} // namespace rhiza
