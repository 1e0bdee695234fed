#include <doctest.h>
#include <thread>

#include <random>

#include "ramajet/constants.hpp"
#include "ramajet/hyperseries.hpp"
#include "oracles.hpp"

using namespace ramajet;

namespace {
Real tolerance_1e(int k, int prec) {
    return Real::parse("1e-" + std::to_string(k), prec);
}
} // namespace

TEST_CASE("p_jet heads") {
    SeriesFamily f32 = make_f32(make_rational(1, 2));
    auto p0 = p_jet(f32, 0, 3);
    CHECK(p0[0] == 1);
    CHECK(p0[1] == 0);
    CHECK(p0[2] == 0);
    auto p1 = p_jet(f32, 1, 1);
    CHECK(p1[0] == make_rational(1, 8));
    SeriesFamily f54 = make_f54(make_rational(1, 2), make_rational(1, 2));
    auto q1 = p_jet(f54, 1, 1);
    CHECK(q1[0] == make_rational(1, 32));
}

TEST_CASE("component series heads and the differential ladder") {
    SeriesFamily f32 = make_f32(make_rational(1, 2));
    const int N = 12;
    auto cs = component_series(f32, N);
    CHECK(cs.A[1][0] == make_rational(1, 8));
    // B = zA' + XA exactly, coefficientwise: B_n = n A_n + X A_n
    for (int n = 0; n <= N; ++n) {
        RationalJet expect = cs.A[n] * RationalJet::variable(Rational(n), 3);
        for (int i = 0; i < 3; ++i) CHECK(cs.B[n][i] == expect[i]);
    }

    SeriesFamily f54 = make_f54(make_rational(1, 2), make_rational(1, 3));
    auto cs54 = component_series(f54, N);
    CHECK(cs54.B[1][0] == cs54.A[1][0]); // n P_n head at n = 1
    for (int n = 0; n <= N; ++n) {
        RationalJet shift = RationalJet::variable(Rational(n), 5);
        RationalJet eb = cs54.A[n] * shift;
        RationalJet ec = eb * shift;
        for (int i = 0; i < 5; ++i) {
            CHECK(cs54.B[n][i] == eb[i]);
            CHECK(cs54.C[n][i] == ec[i]);
        }
    }
}

TEST_CASE("differential relations b_i = a_{i-1} + z a_i' hold coefficientwise") {
    // [z^n] b_i = [z^n] a_{i-1} + n [z^n] a_i
    for (auto fam : {make_f32(make_rational(1, 2)), make_f54(make_rational(1, 3), make_rational(1, 4))}) {
        const int N = 10;
        auto comps = component_scalar_series(fam, N);
        const auto& a = comps[0];
        const auto& b = comps[1];
        const int order = fam.jet_order();
        for (int i = 0; i < order; ++i) {
            for (int n = 0; n <= N; ++n) {
                Rational expect = Rational(n) * a[i][n];
                if (i > 0) expect += a[i - 1][n];
                CHECK(b[i][n] == expect);
            }
        }
        if (fam.kind == FamilyKind::F54) {
            const auto& c = comps[2];
            for (int i = 0; i < order; ++i) {
                for (int n = 0; n <= N; ++n) {
                    Rational expect = Rational(n) * b[i][n];
                    if (i > 0) expect += b[i - 1][n];
                    CHECK(c[i][n] == expect);
                }
            }
        }
    }
}

TEST_CASE("prefix stability of component series") {
    SeriesFamily fam = make_f54(make_rational(1, 4), make_rational(1, 6));
    auto small = component_series(fam, 6);
    auto big = component_series(fam, 14);
    for (int n = 0; n <= 6; ++n)
        for (int i = 0; i < 5; ++i) CHECK(small.A[n][i] == big.A[n][i]);
}

TEST_CASE("evaluate_components at z = 0 and small z") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    SeriesFamily fam = make_f32(make_rational(1, 2));
    auto cv = evaluate_components(fam, Real::of(0L, P), 1, ctx);
    CHECK(cv.a[0] == Real::of(1L, P));
    CHECK(cv.a[1].is_zero());
    CHECK(cv.a[2].is_zero());
    CHECK(cv.b[1] == Real::of(1L, P));

    CHECK_THROWS_AS(evaluate_components(fam, Real::of(make_rational(96, 100), P), 1, ctx),
                    domain_error);
}

TEST_CASE("b1^2 - 2 b0 b2 = 1/(1-z) at z = 1/4") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    SeriesFamily fam = make_f32(make_rational(1, 2));
    auto cv = evaluate_components(fam, Real::of(make_rational(1, 4), P), 1, ctx);
    Real lhs = cv.b[1] * cv.b[1] - ldexp2(cv.b[0] * cv.b[2], 1);
    CHECK(abs(lhs - Real::of(make_rational(4, 3), P)) < tolerance_1e(70, P));
}

TEST_CASE("clausen alpha component identities") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    auto z0 = clausen_alpha(make_rational(1, 2), Real::of(0L, P), ctx);
    CHECK(z0.first == Real::of(1L, P));
    CHECK(z0.second.is_zero());

    // a0 = alpha0^2, a1 = alpha0 alpha1, a2 = alpha1^2/2
    for (auto [sv, zn, zd] : {std::tuple<long, long, long>{2, 1, 4}, {3, 1, 10}}) {
        Rational s = make_rational(1, sv);
        Real z = Real::of(make_rational(zn, zd), P);
        auto [al0, al1] = clausen_alpha(s, z, ctx);
        auto cv = evaluate_components(make_f32(s), z, 1, ctx);
        CHECK(abs(cv.a[0] - al0 * al0) < tolerance_1e(60, P));
        CHECK(abs(cv.a[1] - al0 * al1) < tolerance_1e(60, P));
        CHECK(abs(cv.a[2] - ldexp2(al1 * al1, -1)) < tolerance_1e(60, P));
    }
}

TEST_CASE("relation residuals on known instances") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();

    auto cv32 = evaluate_components(make_f32(make_rational(1, 2)),
                                    Real::of(make_rational(1, 3), P), 1, ctx);
    auto rep32 = relation_residuals(cv32);
    CHECK(rep32.residuals.at("a1sq") < tolerance_1e(70, P));
    CHECK(rep32.residuals.count("M0") == 1);
    CHECK(rep32.max_residual < tolerance_1e(60, P));

    auto cv54 = evaluate_components(make_f54(make_rational(1, 2), make_rational(1, 2)),
                                    Real::of(make_rational(-1, 4), P), -1, ctx);
    auto rep54 = relation_residuals(cv54);
    CHECK(rep54.residuals.at("c-quadratic") < tolerance_1e(60, P));
    CHECK(rep54.residuals.size() == 17);
    CHECK(rep54.max_residual < tolerance_1e(60, P));

    auto cv54b = evaluate_components(make_f54(make_rational(1, 4), make_rational(1, 6)),
                                     Real::of(make_rational(1, 50), P), 1, ctx);
    auto rep54b = relation_residuals(cv54b);
    CHECK(rep54b.max_residual < tolerance_1e(60, P));
}

TEST_CASE("relation residuals at random z across all families") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    std::mt19937_64 rng(oracles::test_seed() + 5);
    std::uniform_int_distribution<long> numer(1, 29);
    Real bound = ldexp2(Real::of(1L, P), -(ctx.working_bits / 2));

    std::vector<SeriesFamily> fams;
    for (const auto& s : admissible_f32_values()) fams.push_back(make_f32(s));
    fams.push_back(make_f54(make_rational(1, 2), make_rational(1, 6)));
    fams.push_back(make_f54(make_rational(1, 5), make_rational(2, 5)));
    fams.push_back(make_f54(make_rational(1, 12), make_rational(5, 12)));

    for (const auto& fam : fams) {
        for (int rep = 0; rep < 3; ++rep) {
            long n = numer(rng);
            int sign = (rep % 2 == 0) ? 1 : -1;
            Real z = Real::of(make_rational(sign * n, 100), P);
            auto cv = evaluate_components(fam, z, sign, ctx);
            auto r = relation_residuals(cv);
            CHECK(r.max_residual < bound);
        }
    }
}

TEST_CASE("y log-ladder matches (uz)^X A") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    SeriesFamily fam = make_f54(make_rational(1, 2), make_rational(1, 2));
    Real z = Real::of(make_rational(-1, 5), P);
    auto cv = evaluate_components(fam, z, -1, ctx);

    RealJet ajet = RealJet::constant(cv.a[0], 5);
    for (int i = 1; i < 5; ++i) ajet[i] = cv.a[i];
    RealJet y = jet_pow_base(z * -1L, 1, 5) * ajet;

    // explicit ladder: y_m = sum_{i} a_i ln^{m-i}(uz)/(m-i)!
    Real lnuz = log(z * -1L);
    for (int m = 0; m < 5; ++m) {
        Real expect = Real::of(0L, P);
        Real lp = Real::of(1L, P);
        Rational fact(1);
        for (int i = m; i >= 0; --i) {
            // power (m-i), built up incrementally
            expect += cv.a[i] * lp / Real::of(fact, P);
            lp *= lnuz;
            fact *= (m - i + 1);
        }
        CHECK(abs(y[m] - expect) < tolerance_1e(80, P));
    }
}

TEST_CASE("picard-fuchs recurrence is exactly zero") {
    CHECK(picard_fuchs_residual(make_f32(make_rational(1, 2)), 10) == 0);
    CHECK(picard_fuchs_residual(make_f32(make_rational(1, 3)), 10) == 0);
    CHECK(picard_fuchs_residual(make_f54(make_rational(1, 2), make_rational(1, 3)), 10) == 0);
    CHECK(picard_fuchs_residual(make_f76(), 8) == 0);
}

TEST_CASE("component evaluation is safe to run concurrently") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    SeriesFamily fam = make_f54(make_rational(1, 2), make_rational(1, 3));
    Real z = Real::of(make_rational(1, 7), P);
    auto cv0 = evaluate_components(fam, z, 1, ctx);
    std::vector<std::thread> pool;
    std::vector<int> mismatches(4, 0);
    for (int t = 0; t < 4; ++t) {
        pool.emplace_back([&, t]() {
            auto cv = evaluate_components(fam, z, 1, ctx);
            for (int i = 0; i < 5; ++i)
                if (!(cv.a[i] == cv0.a[i] && cv.b[i] == cv0.b[i] && cv.c[i] == cv0.c[i]))
                    ++mismatches[t];
        });
    }
    for (auto& th : pool) th.join();
    for (int t = 0; t < 4; ++t) CHECK(mismatches[t] == 0);
}

TEST_CASE("scalar series sum") {
    PrecisionContext ctx = make_context(256);
    const int P = ctx.internal_bits();
    SeriesFamily fam = make_f32(make_rational(1, 2));
    // z = 1/4, poly = 1/4 + (3/2) n sums to 1/pi
    Real s = scalar_series_sum(fam, Real::of(make_rational(1, 4), P),
                               {Real::of(make_rational(1, 4), P), Real::of(make_rational(3, 2), P)},
                               ctx);
    CHECK(abs(s - 1L / pi_value(P)) < tolerance_1e(70, P));
}
