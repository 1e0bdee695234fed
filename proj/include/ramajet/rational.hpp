#pragma once

#include <gmpxx.h>

#include <string>

#include "ramajet/error.hpp"

namespace ramajet {

// Exact rational scalar. mpq_class keeps gcd(|num|,den)=1 and den>0 after
// canonicalization; every constructor here canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q", or "-p/q". Whitespace is not accepted.
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q" form.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// Floor of log2(|r|) style size measure used for height caps.
size_t rational_height_bits(const Rational& r);

} // namespace ramajet
