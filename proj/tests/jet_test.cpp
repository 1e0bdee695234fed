#include <doctest.h>

#include <random>

#include "ramajet/constants.hpp"
#include "ramajet/jet.hpp"
#include "oracles.hpp"

using namespace ramajet;

namespace {

RationalJet rj(std::vector<long> v) {
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return RationalJet(std::move(c));
}

RationalJet random_jet(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    std::vector<Rational> c;
    for (int i = 0; i < order; ++i) c.push_back(make_rational(num(rng), den(rng)));
    return RationalJet(std::move(c));
}

} // namespace

TEST_CASE("jet multiply truncates the nilpotent power") {
    auto p2 = rj({1, 1}) * rj({1, -1});
    CHECK(p2[0] == 1);
    CHECK(p2[1] == 0);
    auto p3 = rj({1, 1, 0}) * rj({1, -1, 0});
    CHECK(p3[0] == 1);
    CHECK(p3[1] == 0);
    CHECK(p3[2] == -1);
    auto s = rj({2, 3}) + rj({-2, 1});
    CHECK(s[0] == 0);
    CHECK(s[1] == 4);
    CHECK_THROWS_AS(rj({1, 2}) * rj({1, 2, 3}), shape_error);
}

TEST_CASE("jet inverse") {
    auto i3 = jet_inv(rj({1, 1, 0}));
    CHECK(i3[0] == 1);
    CHECK(i3[1] == -1);
    CHECK(i3[2] == 1);
    auto i2 = jet_inv(rj({2, 0}));
    CHECK(i2[0] == make_rational(1, 2));
    CHECK(i2[1] == 0);
    CHECK_THROWS_AS(jet_inv(rj({0, 1})), domain_error);
}

TEST_CASE("jet exp and log") {
    auto e = jet_exp(rj({0, 1, 0}));
    CHECK(e[0] == 1);
    CHECK(e[1] == 1);
    CHECK(e[2] == make_rational(1, 2));

    auto l = jet_log(rj({1, 1, 0, 0}));
    CHECK(l[0] == 0);
    CHECK(l[1] == 1);
    CHECK(l[2] == make_rational(-1, 2));
    CHECK(l[3] == make_rational(1, 3));

    auto rt = jet_exp(jet_log(rj({1, 2, 3})));
    CHECK(rt[0] == 1);
    CHECK(rt[1] == 2);
    CHECK(rt[2] == 3);

    CHECK_THROWS_AS(jet_log(rj({0, 1})), domain_error);
    CHECK_THROWS_AS(jet_exp(rj({1, 1})), domain_error); // rational exp needs zero head
}

TEST_CASE("jet_pow_base") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    Real t = ldexp2(Real::of(1L, P), -(P - 16));

    auto id = jet_pow_base(Real::of(1L, P), 1, 4);
    CHECK(abs(id[0] - Real::of(1L, P)) < t);
    CHECK(abs(id[1]) < t);
    CHECK(abs(id[3]) < t);

    auto e = jet_pow_base(exp(Real::of(1L, P)), 1, 3);
    CHECK(abs(e[1] - Real::of(1L, P)) < t);
    CHECK(abs(e[2] - Real::of(make_rational(1, 2), P)) < t);

    // w = 1/4, sign = -1: coefficient of X is -ln(1/4) = 2 ln 2
    auto q = jet_pow_base(Real::of(make_rational(1, 4), P), -1, 2);
    Real ln2(P);
    mpfr_const_log2(ln2.raw(), MPFR_RNDN);
    CHECK(abs(q[1] - ldexp2(ln2, 1)) < t);

    CHECK_THROWS_AS(jet_pow_base(Real::of(0L, P), 1, 3), domain_error);
}

TEST_CASE("integer pochhammer") {
    auto a = rj({1, 2}); // order 2 jet 1/2 + X scaled below
    std::vector<Rational> c = {make_rational(1, 2), Rational(1)};
    RationalJet half_x{c};
    auto p1 = jet_pochhammer_int(half_x, 1);
    CHECK(p1[0] == make_rational(1, 2));
    CHECK(p1[1] == 1);
    auto p2 = jet_pochhammer_int(half_x, 2);
    CHECK(p2[0] == make_rational(3, 4)); // (1/2)(3/2)
    CHECK(p2[1] == 2);                   // (1/2) + (3/2) coefficients of X
    auto p0 = jet_pochhammer_int(a, 0);
    CHECK(p0[0] == 1);
    CHECK(p0[1] == 0);
}

TEST_CASE("fractional pochhammer against gamma expansion") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    FundamentalConstants fc = fundamental_constants(ctx);
    Real t = ldexp2(Real::of(1L, P), -(ctx.working_bits - 8));

    auto g1 = jet_pochhammer_frac(Rational(1), 2, ctx);
    CHECK(abs(g1[0] - Real::of(1L, P)) < t);
    CHECK(abs(g1[1] + fc.euler_gamma) < t);

    // order 3: X^2 coefficient is (gamma^2 + pi^2/6)/2, from exponentiating
    // -gamma X + (pi^2/12) X^2 by hand
    auto g13 = jet_pochhammer_frac(Rational(1), 3, ctx);
    Real expect = ldexp2(fc.euler_gamma * fc.euler_gamma + fc.pi * fc.pi / 6L, -1);
    CHECK(abs(g13[2] - expect) < t);

    auto gh = jet_pochhammer_frac(make_rational(1, 2), 2, ctx);
    CHECK(abs(gh[1] + fc.euler_gamma + ldexp2(fc.ln2, 1)) < t);

    CHECK_THROWS_AS(jet_pochhammer_frac(Rational(1), 8, ctx), unsupported_error);
}

TEST_CASE("pochhammer shift law (s)_{n+X} = (sI+X)_n (s)_X") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    Real t = ldexp2(Real::of(1L, P), -(ctx.working_bits - 8));
    for (const Rational& s : {make_rational(1, 2), make_rational(1, 3)}) {
        for (long n : {1L, 2L, 3L}) {
            for (int order : {3, 5}) {
                RealJet lhs = jet_pochhammer_frac(s + Rational(n), order, ctx);
                RealJet shift =
                    jet_pochhammer_int(RealJet::variable(Real::of(s, P), order), n);
                // (s)_{n+X} = Gamma(s+n+X)/Gamma(s) = (s+n)_X * (s)_n; compare
                // against (sI+X)_n (s)_X normalized by the scalar (s)_n
                RealJet rhs = shift * jet_pochhammer_frac(s, order, ctx);
                Rational poch_n(1);
                Rational acc = s;
                for (long i = 0; i < n; ++i) {
                    poch_n *= acc;
                    acc += 1;
                }
                RealJet lhs_scaled = lhs * Real::of(poch_n, P);
                for (int i = 0; i < order; ++i) CHECK(abs(lhs_scaled[i] - rhs[i]) < t);
            }
        }
    }
}

TEST_CASE("Taylor-coefficient realization on rational jets") {
    // For f in {exp, log(1+.), (1+.)^{-1}} the jet pipeline applied at a
    // rational point u reproduces the exact Taylor coefficients of f.
    std::mt19937_64 rng(oracles::test_seed() + 2);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 6);
    for (int order : {3, 5, 7}) {
        for (int rep = 0; rep < 6; ++rep) {
            Rational u = make_rational(num(rng), den(rng));
            // (1+u+X)^{-1}: coefficients (-1)^k (1+u)^{-(k+1)}
            if (u != -1) {
                RationalJet inv = jet_inv(RationalJet::variable(Rational(1) + u, order));
                Rational expect = Rational(1) / (Rational(1) + u);
                for (int kk = 0; kk < order; ++kk) {
                    CHECK(inv[kk] == expect);
                    expect = -expect / (Rational(1) + u);
                }
            }
            // log(1+u+X) - log(1+u): coefficients (-1)^{k-1}/(k (1+u)^k)
            if (u > -1) {
                RationalJet scaled =
                    RationalJet::variable(Rational(1) + u, order) * (Rational(1) / (Rational(1) + u));
                RationalJet lg = jet_log(scaled);
                CHECK(lg[0] == 0);
                for (int kk = 1; kk < order; ++kk) {
                    Rational p = Rational(1);
                    for (int i = 0; i < kk; ++i) p *= (Rational(1) + u);
                    Rational expect = Rational(kk % 2 ? 1 : -1) / (Rational(kk) * p);
                    CHECK(lg[kk] == expect);
                }
            }
            // exp(u+X)/e^u = exp(X): coefficients 1/k!
            RationalJet ex = jet_exp(RationalJet::variable(Rational(0), order));
            Rational fact(1);
            for (int kk = 1; kk < order; ++kk) {
                fact *= kk;
                CHECK(ex[kk] == Rational(1) / fact);
            }
        }
    }
}

TEST_CASE("ring axioms on random rational jets") {
    std::mt19937_64 rng(oracles::test_seed() + 3);
    for (int order : {3, 5, 7}) {
        for (int rep = 0; rep < 8; ++rep) {
            auto a = random_jet(rng, order);
            auto b = random_jet(rng, order);
            auto c = random_jet(rng, order);
            auto assoc1 = (a * b) * c;
            auto assoc2 = a * (b * c);
            auto dist1 = a * (b + c);
            auto dist2 = a * b + a * c;
            auto comm1 = a * b;
            auto comm2 = b * a;
            for (int i = 0; i < order; ++i) {
                CHECK(assoc1[i] == assoc2[i]);
                CHECK(dist1[i] == dist2[i]);
                CHECK(comm1[i] == comm2[i]);
            }
        }
    }
}

TEST_CASE("inverse is an involution on invertible jets") {
    std::mt19937_64 rng(oracles::test_seed() + 4);
    for (int order : {3, 5}) {
        for (int rep = 0; rep < 8; ++rep) {
            auto a = random_jet(rng, order);
            if (a[0] == 0) a[0] = 1;
            auto back = jet_inv(jet_inv(a));
            for (int i = 0; i < order; ++i) CHECK(back[i] == a[i]);
            auto prod = a * jet_inv(a);
            CHECK(prod[0] == 1);
            for (int i = 1; i < order; ++i) CHECK(prod[i] == 0);
        }
    }
}

TEST_CASE("jet text form") {
    CHECK(jet_to_text(rj({1, 0, -1})) == "1 + 0*X + -1*X^2");
}
