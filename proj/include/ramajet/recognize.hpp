#pragma once

#include <string>

#include "ramajet/rational.hpp"
#include "ramajet/real.hpp"

namespace ramajet {

enum class RecognitionKind { rational, quadratic, quadratic_affine, unrecognized };

enum class RecognitionMode { rational, quadratic };

// Result of identifying a computed real as an exact constant. Every accepted
// identification carries the residual |exact - input| measured at full
// precision; unrecognized is a value, not an error.
struct RecognizedConstant {
    RecognitionKind kind = RecognitionKind::unrecognized;
    Rational rational_value;      // kind == rational
    Rational sqrt_argument;       // kind == quadratic: value is sqrt(sqrt_argument)
    Rational affine_p, affine_q;  // kind == quadratic_affine: p + q sqrt(d)
    long affine_d = 0;
    Real certificate_residual;

    bool recognized() const { return kind != RecognitionKind::unrecognized; }
    // "p/q", "sqrt(r)", "p + q*sqrt(d)", or "unrecognized"
    std::string to_text() const;
    // Exact value as a Real at the given precision (throws if unrecognized).
    Real reconstruct(int prec_bits) const;
};

// Rational mode walks continued-fraction convergents p/q with q bounded by
// denominator_bound and accepts the first one within the context tolerance.
// Quadratic mode additionally tries sqrt(r) with rational r (via x^2) and
// p + q sqrt(d) for square-free d <= 1000 with integer relation heights
// capped at 2^32.
RecognizedConstant recognize(const Real& x, const Integer& denominator_bound, RecognitionMode mode,
                             const PrecisionContext& ctx);

// Continued-fraction convergent search used by recognize; exposed for tests.
// Returns true and fills out when a convergent with denominator <= bound lies
// within tol of x.
bool rational_convergent_within(const Real& x, const Integer& bound, const Real& tol, Rational& out);

} // namespace ramajet
