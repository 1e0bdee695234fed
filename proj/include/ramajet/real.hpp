#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "ramajet/error.hpp"
#include "ramajet/rational.hpp"

namespace ramajet {

// Arbitrary-precision real value. Thin RAII wrapper over mpfr_t; every value
// carries its own precision and binary operations round at the larger of the
// two operand precisions. All operations round to nearest.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_nan(v_);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, 64);
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const Rational& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(double x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    // Parses a decimal string (scientific notation accepted).
    static Real parse(const std::string& text, mpfr_prec_t prec);

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

    // Decimal string with the requested number of significant digits.
    std::string str(size_t digits = 40) const;

    Real& operator+=(const Real& o) { return apply2(mpfr_add, o); }
    Real& operator-=(const Real& o) { return apply2(mpfr_sub, o); }
    Real& operator*=(const Real& o) { return apply2(mpfr_mul, o); }
    Real& operator/=(const Real& o) { return apply2(mpfr_div, o); }
    Real& operator+=(long o) {
        mpfr_add_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator-=(long o) {
        mpfr_sub_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator*=(long o) {
        mpfr_mul_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }
    Real& operator/=(long o) {
        mpfr_div_si(v_, v_, o, MPFR_RNDN);
        return *this;
    }

    friend Real operator+(const Real& a, const Real& b) { return binop(mpfr_add, a, b); }
    friend Real operator-(const Real& a, const Real& b) { return binop(mpfr_sub, a, b); }
    friend Real operator*(const Real& a, const Real& b) { return binop(mpfr_mul, a, b); }
    friend Real operator/(const Real& a, const Real& b) { return binop(mpfr_div, a, b); }
    friend Real operator-(const Real& a) {
        Real r(a.prec());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, long b) { return binop_si(mpfr_add_si, a, b); }
    friend Real operator-(const Real& a, long b) { return binop_si(mpfr_sub_si, a, b); }
    friend Real operator*(const Real& a, long b) { return binop_si(mpfr_mul_si, a, b); }
    friend Real operator/(const Real& a, long b) { return binop_si(mpfr_div_si, a, b); }
    friend Real operator+(long a, const Real& b) { return b + a; }
    friend Real operator*(long a, const Real& b) { return b * a; }
    friend Real operator-(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(long a, const Real& b) {
        Real r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  private:
    using mpfr_fn2 = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using mpfr_fn_si = int (*)(mpfr_ptr, mpfr_srcptr, long, mpfr_rnd_t);

    Real& apply2(mpfr_fn2 f, const Real& o) {
        if (o.prec() > prec()) {
            Real tmp(o.prec());
            f(tmp.v_, v_, o.v_, MPFR_RNDN);
            *this = std::move(tmp);
        } else {
            f(v_, v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    static Real binop(mpfr_fn2 f, const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        f(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    static Real binop_si(mpfr_fn_si f, const Real& a, long b) {
        Real r(a.prec());
        f(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);  // domain_error for a < 0
Real exp(const Real& a);
Real log(const Real& a);  // domain_error for a <= 0
Real pow_si(const Real& a, long e);
Real ldexp2(const Real& a, long e);  // a * 2^e, exact
Real sin(const Real& a);
Real cos(const Real& a);
Real max(const Real& a, const Real& b);

// Exact conversion: every finite Real is a dyadic rational.
Rational to_rational_exact(const Real& a);

// Nearest integer, |a| must be modest.
Integer round_to_integer(const Real& a);

// Precision configuration. working_bits is the precision results are quoted
// at; guard_bits pad every internal computation; recognition_tolerance is the
// acceptance radius for constant recognition.
struct PrecisionContext {
    int working_bits = 256;
    int guard_bits = 64;

    int internal_bits() const { return working_bits + guard_bits; }
    // 2^{-working_bits/2}
    Real recognition_tolerance() const { return ldexp2(Real::of(1L, 64), -(working_bits / 2)); }
    // 2^{-(working_bits+guard_bits)}, the summation tail target
    Real tail_target() const { return ldexp2(Real::of(1L, 64), -internal_bits()); }
};

// bits >= 64 required; guard_bits >= 32.
PrecisionContext make_context(int bits, int guard_bits = 64);

} // namespace ramajet
