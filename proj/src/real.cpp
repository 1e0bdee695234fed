#include "ramajet/real.hpp"

#include <cstdlib>
#include <cstring>

namespace ramajet {

Real Real::parse(const std::string& text, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.raw(), text.c_str(), 10, MPFR_RNDN) != 0)
        throw domain_error("cannot parse real literal: " + text);
    return r;
}

std::string Real::str(size_t digits) const {
    if (is_nan()) return "nan";
    char* s = nullptr;
    // %.*Rg keeps the shortest faithful form within the digit budget
    int n = mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
    if (n < 0) throw error("mpfr_asprintf failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

namespace {
template <typename F>
Real unop(F f, const Real& a) {
    Real r(a.prec());
    f(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
} // namespace

Real abs(const Real& a) { return unop(mpfr_abs, a); }

Real sqrt(const Real& a) {
    if (a.sign() < 0) throw domain_error("sqrt of negative value");
    return unop(mpfr_sqrt, a);
}

Real exp(const Real& a) { return unop(mpfr_exp, a); }

Real log(const Real& a) {
    if (a.sign() <= 0) throw domain_error("log of non-positive value");
    return unop(mpfr_log, a);
}

Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

Real ldexp2(const Real& a, long e) {
    Real r(a.prec());
    mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

Real sin(const Real& a) { return unop(mpfr_sin, a); }
Real cos(const Real& a) { return unop(mpfr_cos, a); }

Real max(const Real& a, const Real& b) { return a >= b ? a : b; }

Rational to_rational_exact(const Real& a) {
    if (!a.is_finite()) throw domain_error("cannot convert non-finite real to rational");
    if (a.is_zero()) return Rational(0);
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), a.raw());
    Rational r(m);
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rational(p);
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rational(p);
    }
    r.canonicalize();
    return r;
}

Integer round_to_integer(const Real& a) {
    Real t(a.prec());
    mpfr_round(t.raw(), a.raw());
    Integer z;
    mpfr_get_z(z.get_mpz_t(), t.raw(), MPFR_RNDN);
    return z;
}

PrecisionContext make_context(int bits, int guard_bits) {
    if (bits < 64) throw config_error("working precision below 64 bits");
    if (guard_bits < 32) throw config_error("guard precision below 32 bits");
    return PrecisionContext{bits, guard_bits};
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw domain_error("empty rational literal");
    Rational r;
    if (r.set_str(text, 10) != 0) throw domain_error("cannot parse rational literal: " + text);
    if (r.get_den() == 0) throw domain_error("rational with zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

size_t rational_height_bits(const Rational& r) {
    size_t n = mpz_sizeinbase(r.get_num().get_mpz_t(), 2);
    size_t d = mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
    return n > d ? n : d;
}

} // namespace ramajet
