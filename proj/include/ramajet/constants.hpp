#pragma once

#include <vector>

#include "ramajet/rational.hpp"
#include "ramajet/real.hpp"

namespace ramajet {

struct FundamentalConstants {
    Real pi;
    Real euler_gamma;
    Real ln2;
    Real zeta3;
};

// pi, gamma, ln 2, zeta(3) at internal precision.
FundamentalConstants fundamental_constants(const PrecisionContext& ctx);

Real pi_value(int prec_bits);
Real euler_gamma_value(int prec_bits);

// psi^{(m)}(s) for rational s > 0 and 0 <= m <= 6. m = 0 is the digamma,
// computed with the Gauss formula after shifting s into (0,1]; m >= 1 goes
// through psi^{(m)}(s) = (-1)^{m+1} m! zeta(m+1, s) with an Euler-Maclaurin
// tail for the Hurwitz zeta.
Real polygamma(int m, const Rational& s, const PrecisionContext& ctx);

// Hurwitz zeta(r, s) for integer r >= 2, rational s > 0.
Real hurwitz_zeta(int r, const Rational& s, int prec_bits);

// cot(pi s) for non-integer rational s; exactly 0 at half-integers.
Real cot_pi(const Rational& s, const PrecisionContext& ctx);

// B_0 .. B_{count-1} as exact rationals (odd ones beyond B_1 are zero).
std::vector<Rational> bernoulli_numbers(size_t count);

} // namespace ramajet
