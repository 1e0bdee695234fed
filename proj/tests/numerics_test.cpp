#include <doctest.h>

#include <random>

#include "ramajet/constants.hpp"
#include "ramajet/recognize.hpp"
#include "oracles.hpp"

using namespace ramajet;

namespace {
Real tol_bits(int bits, int prec) { return ldexp2(Real::of(1L, prec), -bits); }
} // namespace

TEST_CASE("precision context construction") {
    PrecisionContext c = make_context(256);
    CHECK(c.working_bits == 256);
    CHECK(c.recognition_tolerance() == ldexp2(Real::of(1L, 64), -128));
    CHECK_NOTHROW(make_context(64));
    CHECK_THROWS_AS(make_context(32), config_error);
}

TEST_CASE("fundamental constants") {
    PrecisionContext ctx = make_context(256);
    FundamentalConstants fc = fundamental_constants(ctx);
    const int P = ctx.internal_bits();
    CHECK(abs(fc.pi - Real::parse("3.14159265358979323846264338327950288419716939937510", P)) <
          tol_bits(160, P));
    CHECK(abs(fc.euler_gamma - Real::parse("0.57721566490153286060651209008240243104215933593992", P)) <
          tol_bits(160, P));
    // zeta(3) against the direct-summation oracle
    CHECK(abs(fc.zeta3 - oracles::zeta3_direct(P)) < Real::parse("1e-30", P));
    CHECK(abs(exp(fc.ln2) - Real::of(2L, P)) < tol_bits(P - 8, P));
}

TEST_CASE("polygamma closed forms") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    FundamentalConstants fc = fundamental_constants(ctx);
    Real t = tol_bits(ctx.working_bits, P);

    CHECK(abs(polygamma(0, Rational(1), ctx) + fc.euler_gamma) < t);
    CHECK(abs(polygamma(0, make_rational(1, 2), ctx) + fc.euler_gamma + ldexp2(fc.ln2, 1)) < t);
    // psi''(1/2) = -14 zeta(3)
    CHECK(abs(polygamma(2, make_rational(1, 2), ctx) + 14L * fc.zeta3) < t);
    // psi'(1/3) against the direct-summation oracle
    CHECK(abs(polygamma(1, make_rational(1, 3), ctx) - oracles::trigamma_direct(make_rational(1, 3), P)) <
          Real::parse("1e-28", P));
    // psi'(1) = pi^2/6
    CHECK(abs(polygamma(1, Rational(1), ctx) - fc.pi * fc.pi / 6L) < t);

    CHECK_THROWS_AS(polygamma(0, Rational(0), ctx), domain_error);
    CHECK_THROWS_AS(polygamma(7, Rational(1), ctx), unsupported_error);
}

TEST_CASE("polygamma recurrence property") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    std::mt19937_64 rng(oracles::test_seed());
    std::uniform_int_distribution<long> num(1, 40), den(1, 20);
    Real t = tol_bits(ctx.working_bits - 8, P);
    for (int rep = 0; rep < 12; ++rep) {
        Rational s = make_rational(num(rng), den(rng));
        while (s > 2) s /= 2;
        for (int m = 0; m <= 3; ++m) {
            // psi^{(m)}(s+1) - psi^{(m)}(s) = (-1)^m m! s^{-(m+1)}
            Real lhs = polygamma(m, s + 1, ctx) - polygamma(m, s, ctx);
            long fact = 1;
            for (int i = 2; i <= m; ++i) fact *= i;
            Real rhs = Real::of(fact, P) * pow_si(Real::of(s, P), -(m + 1));
            if (m % 2) rhs = -rhs;
            CHECK(abs(lhs - rhs) < t);
        }
    }
}

TEST_CASE("digamma reflection") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    Real pi = pi_value(P);
    Real t = tol_bits(ctx.working_bits - 8, P);
    for (long d : {3L, 4L, 6L}) {
        Rational s = make_rational(1, d);
        Real lhs = polygamma(0, s, ctx) - polygamma(0, Rational(1) - s, ctx);
        CHECK(abs(lhs + pi * cot_pi(s, ctx)) < t);
    }
}

TEST_CASE("cot_pi") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    CHECK(cot_pi(make_rational(1, 2), ctx).is_zero());
    CHECK(abs(cot_pi(make_rational(1, 4), ctx) - Real::of(1L, P)) < tol_bits(240, P));
    Real c3 = cot_pi(make_rational(1, 3), ctx);
    CHECK(abs(c3 * c3 * 3L - Real::of(1L, P)) < tol_bits(240, P));
    CHECK_THROWS_AS(cot_pi(Rational(2), ctx), domain_error);
}

TEST_CASE("recognition: rationals") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    auto r = recognize(Real::of(make_rational(1, 4), P), Integer(1000000),
                       RecognitionMode::rational, ctx);
    REQUIRE(r.kind == RecognitionKind::rational);
    CHECK(r.rational_value == make_rational(1, 4));
    CHECK(r.certificate_residual <= ctx.recognition_tolerance());

    // negative value
    auto rn = recognize(Real::of(make_rational(-355, 113), P), Integer(1000), RecognitionMode::rational, ctx);
    REQUIRE(rn.kind == RecognitionKind::rational);
    CHECK(rn.rational_value == make_rational(-355, 113));
}

TEST_CASE("recognition: quadratic surd") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    Real x = sqrt(Real::of(5L, P));
    auto r = recognize(x, Integer(1000000), RecognitionMode::quadratic, ctx);
    REQUIRE(r.kind == RecognitionKind::quadratic);
    CHECK(r.sqrt_argument == Rational(5));

    // affine: 3 - 2 sqrt(2)
    Real y = Real::of(3L, P) - ldexp2(sqrt(Real::of(2L, P)), 1);
    auto ra = recognize(y, Integer(1000000), RecognitionMode::quadratic, ctx);
    REQUIRE(ra.kind == RecognitionKind::quadratic_affine);
    CHECK(ra.affine_p == Rational(3));
    CHECK(ra.affine_q == Rational(-2));
    CHECK(ra.affine_d == 2);
}

TEST_CASE("recognition: unrecognized certified by exhaustive scan") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    Real x = Real::parse("0.1234567890123", P);
    // the oracle: no p/q with q <= 1000 within tolerance
    CHECK(oracles::no_rational_within(x, 1000, ctx.recognition_tolerance()));
    auto r = recognize(x, Integer(1000), RecognitionMode::rational, ctx);
    CHECK(r.kind == RecognitionKind::unrecognized);
}

TEST_CASE("recognition soundness invariant") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    std::mt19937_64 rng(oracles::test_seed() + 1);
    std::uniform_int_distribution<long> num(-200, 200), den(1, 997);
    for (int rep = 0; rep < 40; ++rep) {
        long n = num(rng), d = den(rng);
        Real x = Real::of(make_rational(n, d), P);
        auto r = recognize(x, Integer(100000), RecognitionMode::quadratic, ctx);
        REQUIRE(r.recognized());
        CHECK(abs(r.reconstruct(P) - x) <= ctx.recognition_tolerance());
    }
}

TEST_CASE("recognition stable under doubled precision") {
    for (int bits : {256, 512}) {
        PrecisionContext ctx = make_context(bits);
        const int P = ctx.internal_bits();
        auto r1 = recognize(sqrt(Real::of(41L, P)), Integer(1000000), RecognitionMode::quadratic, ctx);
        REQUIRE(r1.kind == RecognitionKind::quadratic);
        CHECK(r1.sqrt_argument == Rational(41));
        auto r2 = recognize(Real::of(make_rational(-1, 1024), P), Integer(1000000),
                            RecognitionMode::quadratic, ctx);
        REQUIRE(r2.kind == RecognitionKind::rational);
        CHECK(r2.rational_value == make_rational(-1, 1024));
    }
}

TEST_CASE("real parsing and exact dyadic conversion") {
    Real x = Real::parse("0.25", 128);
    CHECK(to_rational_exact(x) == make_rational(1, 4));
    CHECK_THROWS_AS(Real::parse("zzz", 64), domain_error);
    CHECK_THROWS_AS(parse_rational("1/0"), domain_error);
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
}
