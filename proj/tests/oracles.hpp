#pragma once

// Test-only oracles, deliberately independent of the library's own
// computation paths: direct summation with hand-written Euler-Maclaurin
// corrections, exhaustive scans, and literal Bernoulli constants.

#include <cstdlib>
#include <random>

#include "ramajet/real.hpp"

namespace oracles {

using ramajet::Rational;
using ramajet::Real;

// zeta(3) by direct summation of n^{-3} to N plus the Euler-Maclaurin tail
// integral 1/(2N^2) + 1/(2N^3) + 1/(4N^4) - 1/(12 N^6) + ..., good to well
// below 1e-30 at N = 400.
inline Real zeta3_direct(int prec) {
    const long N = 400;
    Real acc = Real::of(0L, prec);
    for (long n = 1; n < N; ++n) acc += 1L / (Real::of(n, prec) * n * n);
    Real Nr = Real::of(N, prec);
    acc += 1L / (2L * Nr * Nr);
    acc += 1L / (2L * Nr * Nr * Nr);
    acc += 1L / (4L * pow_si(Nr, 4));    // B2 (2k+1)/2 = 1/4
    acc -= 1L / (12L * pow_si(Nr, 6));   // B4: -1/12
    acc += 1L / (12L * pow_si(Nr, 8));   // B6: +1/12
    acc -= 3L / (20L * pow_si(Nr, 10));  // B8: -3/20
    return acc;
}

// psi'(s) = sum (n+s)^{-2} with the tail 1/(N+s) + 1/(2(N+s)^2) plus
// Bernoulli corrections using literal B2 = 1/6, B4 = -1/30, B6 = 1/42:
// tail = 1/M + 1/(2M^2) + 2!/(6 * 2!) ... written out directly below.
inline Real trigamma_direct(const Rational& s, int prec) {
    const long N = 300;
    Real acc = Real::of(0L, prec);
    Real sr = Real::of(s, prec);
    for (long n = 0; n < N; ++n) acc += pow_si(sr + n, -2);
    Real M = sr + N;
    acc += 1L / M;                       // integral of x^{-2}
    acc += 1L / (2L * M * M);            // f(M)/2
    acc += 1L / (6L * pow_si(M, 3));     // B2 M^{-3}
    acc -= 1L / (30L * pow_si(M, 5));    // B4
    acc += 1L / (42L * pow_si(M, 7));    // B6
    acc -= 1L / (30L * pow_si(M, 9));    // B8
    acc += 5L / (66L * pow_si(M, 11));   // B10
    return acc;
}

// Exhaustively confirms that no fraction p/q with q <= qmax lies within tol
// of x (used to certify an "unrecognized" outcome).
inline bool no_rational_within(const Real& x, long qmax, const Real& tol) {
    const int prec = x.prec();
    for (long q = 1; q <= qmax; ++q) {
        Real scaled = x * q;
        ramajet::Integer p = ramajet::round_to_integer(scaled);
        Real cand = Real::of(ramajet::make_rational(p, ramajet::Integer(q)), prec);
        if (abs(x - cand) <= tol) return false;
    }
    return true;
}

// binomial(2n-2, n-1)/n: Lagrange inversion of q = z - z^2 by hand.
inline Rational catalan_coeff(int n) {
    ramajet::Integer num(1), den(1);
    for (int i = 1; i <= n - 1; ++i) {
        num *= (n - 1) + i;
        den *= i;
    }
    Rational r(num, den * n);
    r.canonicalize();
    return r;
}

inline unsigned long long test_seed() {
    if (const char* s = std::getenv("RAMAJET_TEST_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240817ULL;
}

} // namespace oracles
