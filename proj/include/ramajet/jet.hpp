#pragma once

#include <initializer_list>
#include <vector>

#include "ramajet/constants.hpp"
#include "ramajet/rational.hpp"
#include "ramajet/real.hpp"

namespace ramajet {

// Scalar glue so jets and series can be generic over exact rationals and
// high-precision reals. Reals carry a precision, so fresh zeros/ones must be
// minted "like" an existing value.
template <typename S>
struct scalar_ops;

template <>
struct scalar_ops<Rational> {
    static Rational zero_like(const Rational&) { return Rational(0); }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational from_long(long v, const Rational&) { return Rational(v); }
    static bool is_zero(const Rational& v) { return v == 0; }
    static Rational reciprocal(const Rational& v) {
        if (v == 0) throw domain_error("rational reciprocal of zero");
        return Rational(1) / v;
    }
};

template <>
struct scalar_ops<Real> {
    static Real zero_like(const Real& m) { return Real::of(0L, m.prec()); }
    static Real one_like(const Real& m) { return Real::of(1L, m.prec()); }
    static Real from_long(long v, const Real& m) { return Real::of(v, m.prec()); }
    static bool is_zero(const Real& v) { return v.is_zero(); }
    static Real reciprocal(const Real& v) {
        if (v.is_zero()) throw domain_error("real reciprocal of zero");
        return 1L / v;
    }
};

// Truncated polynomial c0 + c1 X + ... + c_{n-1} X^{n-1} in a nilpotent
// symbol X of order n. Orders are carried per value and must match in
// binary operations; there is no silent promotion.
template <typename S>
class Jet {
  public:
    Jet() = default;
    explicit Jet(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw shape_error("jet must have order >= 1");
    }

    static Jet constant(S head, int order) {
        if (order < 1) throw shape_error("jet must have order >= 1");
        std::vector<S> c;
        c.reserve(order);
        S zero = scalar_ops<S>::zero_like(head);
        c.push_back(std::move(head));
        for (int i = 1; i < order; ++i) c.push_back(zero);
        return Jet(std::move(c));
    }

    static Jet identity_like(const Jet& m) {
        return constant(scalar_ops<S>::one_like(m.c_[0]), m.order());
    }

    // head + X
    static Jet variable(S head, int order) {
        Jet j = constant(std::move(head), order);
        if (order >= 2) j.c_[1] = scalar_ops<S>::one_like(j.c_[0]);
        return j;
    }

    int order() const { return static_cast<int>(c_.size()); }
    const S& operator[](int i) const { return c_[i]; }
    S& operator[](int i) { return c_[i]; }
    const std::vector<S>& coeffs() const { return c_; }

    friend Jet operator+(const Jet& a, const Jet& b) {
        check_orders(a, b);
        Jet r = a;
        for (int i = 0; i < r.order(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        check_orders(a, b);
        Jet r = a;
        for (int i = 0; i < r.order(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend Jet operator-(const Jet& a) {
        Jet r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    // Cauchy product truncated at X^order.
    friend Jet operator*(const Jet& a, const Jet& b) {
        check_orders(a, b);
        const int n = a.order();
        std::vector<S> c;
        c.reserve(n);
        for (int i = 0; i < n; ++i) c.push_back(scalar_ops<S>::zero_like(a.c_[0]));
        for (int i = 0; i < n; ++i) {
            if (scalar_ops<S>::is_zero(a.c_[i])) continue;
            for (int j = 0; i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return Jet(std::move(c));
    }
    friend Jet operator*(const Jet& a, const S& s) {
        Jet r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }

  private:
    static void check_orders(const Jet& a, const Jet& b) {
        if (a.order() != b.order()) throw shape_error("jet order mismatch");
    }
    std::vector<S> c_;
};

using RationalJet = Jet<Rational>;
using RealJet = Jet<Real>;

// Inverse of an invertible jet (head != 0): geometric series in the nilpotent
// part, exact over rationals.
template <typename S>
Jet<S> jet_inv(const Jet<S>& a) {
    if (scalar_ops<S>::is_zero(a[0])) throw domain_error("jet with nilpotent head has no inverse");
    const int n = a.order();
    S h_inv = scalar_ops<S>::reciprocal(a[0]);
    // u = 1 - a/a0 is nilpotent; 1/a = (1/a0) (1 + u + u^2 + ...)
    Jet<S> u = Jet<S>::identity_like(a) - a * h_inv;
    Jet<S> acc = Jet<S>::identity_like(a);
    Jet<S> p = u;
    for (int k = 1; k < n; ++k) {
        acc = acc + p;
        if (k + 1 < n) p = p * u;
    }
    return acc * h_inv;
}

// exp of a jet. Over rationals the head must be zero (exp of a nonzero
// rational is irrational); over reals any head is allowed.
Jet<Rational> jet_exp(const Jet<Rational>& a);
Jet<Real> jet_exp(const Jet<Real>& a);

// log of a jet; rational mode requires head exactly 1, real mode head > 0.
Jet<Rational> jet_log(const Jet<Rational>& a);
Jet<Real> jet_log(const Jet<Real>& a);

// (w)^{sign X} = exp(sign X ln w) for real w > 0: coefficient of X^k is
// (sign ln w)^k / k!.
RealJet jet_pow_base(const Real& w, int sign, int order);

// (A)_n = prod_{j=0}^{n-1} (A + jI); n = 0 gives the identity jet.
template <typename S>
Jet<S> jet_pochhammer_int(const Jet<S>& a, long n) {
    Jet<S> r = Jet<S>::identity_like(a);
    Jet<S> t = a;
    for (long j = 0; j < n; ++j) {
        r = r * t;
        t[0] += scalar_ops<S>::one_like(t[0]);
    }
    return r;
}

// (s)_X = Gamma(s + X)/Gamma(s) as an order-n real jet:
// exp(sum_{k>=1} psi^{(k-1)}(s) X^k / k!). Head coefficient is 1.
RealJet jet_pochhammer_frac(const Rational& s, int order, const PrecisionContext& ctx);

// Nilpotent-part exp/log shared helper: series in the nilpotent part only.
template <typename S>
Jet<S> jet_exp_nilpotent(const Jet<S>& a) {
    const int n = a.order();
    Jet<S> acc = Jet<S>::identity_like(a);
    Jet<S> term = Jet<S>::identity_like(a);
    for (int k = 1; k < n; ++k) {
        term = term * a;
        S inv_k = scalar_ops<S>::reciprocal(scalar_ops<S>::from_long(k, a[0]));
        term = term * inv_k;
        acc = acc + term;
    }
    return acc;
}

std::string jet_to_text(const RationalJet& a);
std::string jet_to_text(const RealJet& a, size_t digits);

} // namespace ramajet
