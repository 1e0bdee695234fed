#include "ramajet/constants.hpp"

#include <mutex>

namespace ramajet {

Real pi_value(int prec_bits) {
    Real r(prec_bits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real euler_gamma_value(int prec_bits) {
    Real r(prec_bits);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

FundamentalConstants fundamental_constants(const PrecisionContext& ctx) {
    const int p = ctx.internal_bits();
    Real ln2(p), z3(p);
    mpfr_const_log2(ln2.raw(), MPFR_RNDN);
    mpfr_zeta_ui(z3.raw(), 3, MPFR_RNDN);
    return FundamentalConstants{pi_value(p), euler_gamma_value(p), std::move(ln2), std::move(z3)};
}

std::vector<Rational> bernoulli_numbers(size_t count) {
    // Grown cache behind a mutex; entries are immutable once written.
    static std::mutex mu;
    static std::vector<Rational> cache;
    std::lock_guard<std::mutex> lock(mu);
    while (cache.size() < count) {
        size_t n = cache.size();
        if (n == 0) {
            cache.emplace_back(1);
            continue;
        }
        // sum_{j=0}^{n} C(n+1,j) B_j = 0
        Rational acc(0);
        Integer binom(1); // C(n+1, 0)
        for (size_t j = 0; j < n; ++j) {
            acc += Rational(binom) * cache[j];
            binom = binom * static_cast<unsigned long>(n + 1 - j) / static_cast<unsigned long>(j + 1);
        }
        Rational b = -acc / Rational(Integer(binom)); // binom = C(n+1, n) = n+1
        b.canonicalize();
        cache.push_back(b);
    }
    return std::vector<Rational>(cache.begin(), cache.begin() + count);
}

namespace {

// Gauss digamma at p/q with 0 < p < q.
Real gauss_digamma(unsigned long p, unsigned long q, int prec) {
    const Real pi = pi_value(prec);
    Real r = -euler_gamma_value(prec);
    r -= log(Real::of(2L * static_cast<long>(q), prec));
    // -(pi/2) cot(pi p / q); cot(pi/2) = 0 exactly when q = 2p
    if (q != 2 * p) {
        Real x = pi * Real::of(make_rational(static_cast<long>(p), static_cast<long>(q)), prec);
        Real c(prec);
        mpfr_cot(c.raw(), x.raw(), MPFR_RNDN);
        r -= ldexp2(pi, -1) * c;
    }
    for (unsigned long n = 1; 2 * n <= q - 1; ++n) {
        unsigned long red = (n * p) % q; // cos is 2pi-periodic in np/q
        Real ang = pi * Real::of(make_rational(static_cast<long>(2 * red), static_cast<long>(q)), prec);
        Real s = sin(pi * Real::of(make_rational(static_cast<long>(n), static_cast<long>(q)), prec));
        r += ldexp2(cos(ang) * log(s), 1);
    }
    return r;
}

Real digamma_rational(const Rational& s, int prec) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    Rational frac = s - Rational(fl);
    // shift s down to frac in [0,1); psi(s) = psi(frac) + sum 1/(frac + i)
    Real shift = Real::of(0L, prec);
    Rational t = frac;
    while (t < s) {
        if (t > 0) shift += 1L / Real::of(t, prec);
        t += 1;
    }
    if (frac == 0) {
        // s is a positive integer: psi(1) = -gamma and the shift covers the rest,
        // except the 1/(0+0) term skipped above starts the ladder at t=1 correctly.
        return -euler_gamma_value(prec) + shift;
    }
    if (!frac.get_den().fits_ulong_p() || frac.get_den() > 1000000)
        throw unsupported_error("digamma denominator too large for the Gauss formula");
    unsigned long p = frac.get_num().get_ui();
    unsigned long q = frac.get_den().get_ui();
    return gauss_digamma(p, q, prec) + shift;
}

} // namespace

Real hurwitz_zeta(int r, const Rational& s, int prec_bits) {
    if (r < 2) throw unsupported_error("hurwitz_zeta requires r >= 2");
    if (s <= 0) throw domain_error("hurwitz_zeta requires s > 0");
    const int P = prec_bits + 64;
    // Direct terms to n < N with N + s ~ 0.8 P, then Euler-Maclaurin tail.
    long N = static_cast<long>(0.8 * P) + 4;
    Real acc = Real::of(0L, P);
    Real sr = Real::of(s, P);
    for (long n = 0; n < N; ++n) acc += pow_si(sr + n, -r);

    Real M = sr + N;
    acc += pow_si(M, 1 - r) / static_cast<long>(r - 1);
    acc += ldexp2(pow_si(M, -r), -1);

    const Real eps = ldexp2(Real::of(1L, P), -P);
    auto bern = bernoulli_numbers(2 * (P / 4) + 4);
    Rational poch(r);           // (r)_{2k-1}
    Rational fact(1);           // (2k)!
    Real Mpow = pow_si(M, -r - 1);
    const Real Minv2 = pow_si(M, -2);
    for (size_t k = 1; 2 * k + 1 < bern.size(); ++k) {
        if (k > 1) {
            poch *= Rational(static_cast<long>(r) + 2 * static_cast<long>(k) - 3);
            poch *= Rational(static_cast<long>(r) + 2 * static_cast<long>(k) - 2);
            Mpow *= Minv2;
        }
        fact *= Rational(2 * static_cast<long>(k) - 1);
        fact *= Rational(2 * static_cast<long>(k));
        Real term = Real::of(bern[2 * k] * poch / fact, P) * Mpow;
        acc += term;
        if (abs(term) < eps) return acc;
    }
    throw error("hurwitz_zeta tail did not reach target accuracy");
}

Real polygamma(int m, const Rational& s, const PrecisionContext& ctx) {
    if (m < 0 || m > 6) throw unsupported_error("polygamma order outside 0..6");
    if (s <= 0) throw domain_error("polygamma requires s > 0");
    const int P = ctx.internal_bits() + 64;
    if (m == 0) {
        Real r = digamma_rational(s, P);
        return r;
    }
    // psi^{(m)}(s) = (-1)^{m+1} m! zeta(m+1, s)
    Real z = hurwitz_zeta(m + 1, s, P);
    long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    Real r = z * f;
    return (m % 2 == 0) ? -r : r;
}

Real cot_pi(const Rational& s, const PrecisionContext& ctx) {
    if (is_integer(s)) throw domain_error("cot(pi s) pole at integer s");
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    Rational frac = s - Rational(fl);
    const int P = ctx.internal_bits();
    if (frac == make_rational(1, 2)) return Real::of(0L, P);
    Real x = pi_value(P) * Real::of(frac, P);
    Real c(P);
    mpfr_cot(c.raw(), x.raw(), MPFR_RNDN);
    return c;
}

} // namespace ramajet
