#include "ramajet/hyperseries.hpp"

#include <algorithm>

namespace ramajet {

namespace {

// prod_i ((n + alpha_i) I + X) / ((n+1) I + X)^m as a rational jet.
RationalJet step_ratio_rational(const SeriesFamily& fam, long n, int order) {
    const auto params = fam.upper_parameters();
    RationalJet num = RationalJet::identity_like(RationalJet::constant(Rational(1), order));
    for (const auto& p : params) num = num * RationalJet::variable(p + n, order);
    RationalJet den = RationalJet::variable(Rational(n + 1), order);
    RationalJet dinv = jet_inv(den);
    RationalJet r = num;
    for (size_t i = 0; i < params.size(); ++i) r = r * dinv;
    return r;
}

RealJet step_ratio_real(const SeriesFamily& fam, long n, int order, int prec) {
    const auto params = fam.upper_parameters();
    RealJet num = RealJet::constant(Real::of(1L, prec), order);
    for (const auto& p : params) num = num * RealJet::variable(Real::of(p + n, prec), order);
    RealJet dinv = jet_inv(RealJet::variable(Real::of(n + 1, prec), order));
    RealJet r = num;
    for (size_t i = 0; i < params.size(); ++i) r = r * dinv;
    return r;
}

Real jet_sup_norm(const RealJet& j) {
    Real m = abs(j[0]);
    for (int i = 1; i < j.order(); ++i) m = max(m, abs(j[i]));
    return m;
}

} // namespace

RationalJet p_jet(const SeriesFamily& fam, long n, int order) {
    if (n < 0) throw domain_error("p_jet requires n >= 0");
    RationalJet acc = RationalJet::constant(Rational(1), order);
    for (long i = 0; i < n; ++i) acc = acc * step_ratio_rational(fam, i, order);
    return acc;
}

RealJet pochhammer_x_at_zero(const SeriesFamily& fam, const PrecisionContext& ctx) {
    const int order = fam.jet_order();
    const auto params = fam.upper_parameters();
    RealJet acc = jet_pochhammer_frac(params[0], order, ctx);
    for (size_t i = 1; i < params.size(); ++i)
        acc = acc * jet_pochhammer_frac(params[i], order, ctx);
    RealJet one_inv = jet_inv(jet_pochhammer_frac(Rational(1), order, ctx));
    for (size_t i = 0; i < params.size(); ++i) acc = acc * one_inv;
    return acc;
}

ComponentSeries component_series(const SeriesFamily& fam, int N) {
    if (N < 1) throw config_error("component_series needs N >= 1");
    const int order = fam.jet_order();
    RationalJet P = RationalJet::constant(Rational(1), order);
    std::vector<RationalJet> A, B, C;
    A.reserve(N + 1);
    B.reserve(N + 1);
    C.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
        RationalJet shift = RationalJet::variable(Rational(n), order); // nI + X
        RationalJet bn = P * shift;
        A.push_back(P);
        B.push_back(bn);
        if (fam.kind == FamilyKind::F54) C.push_back(bn * shift);
        if (n < N) P = P * step_ratio_rational(fam, n, order);
    }
    ComponentSeries out{PowerSeries<RationalJet>(std::move(A)), PowerSeries<RationalJet>(std::move(B)),
                        PowerSeries<RationalJet>(fam.kind == FamilyKind::F54
                                                     ? std::move(C)
                                                     : std::vector<RationalJet>{RationalJet::constant(Rational(0), order)}),
                        fam.kind == FamilyKind::F54};
    return out;
}

std::vector<std::vector<RationalSeries>> component_scalar_series(const SeriesFamily& fam, int N) {
    ComponentSeries cs = component_series(fam, N);
    const int order = fam.jet_order();
    auto extract = [&](const PowerSeries<RationalJet>& S) {
        std::vector<RationalSeries> comps;
        for (int i = 0; i < order; ++i) {
            std::vector<Rational> c;
            c.reserve(N + 1);
            for (int n = 0; n <= N; ++n) c.push_back(S[n][i]);
            comps.emplace_back(std::move(c));
        }
        return comps;
    };
    std::vector<std::vector<RationalSeries>> out;
    out.push_back(extract(cs.A));
    out.push_back(extract(cs.B));
    if (cs.has_c) out.push_back(extract(cs.C));
    return out;
}

ComponentVector evaluate_components(const SeriesFamily& fam, const Real& z, int u,
                                    const PrecisionContext& ctx) {
    const int order = fam.jet_order();
    const int P = ctx.internal_bits();
    ComponentVector out;
    out.family = fam;
    out.z = z;
    out.u = u;
    Real az = abs(z);
    if (az >= Real::of(make_rational(95, 100), P))
        throw domain_error("component evaluation refused for |z| >= 0.95");

    const bool with_c = fam.kind == FamilyKind::F54;
    RealJet A = RealJet::constant(Real::of(1L, P), order);
    RealJet B = RealJet::constant(Real::of(0L, P), order);
    RealJet C = B;
    out.tail_bound = Real::of(0L, P);

    if (z.is_zero()) {
        // only the n = 0 term survives: A = I, B = X, C = X^2
        B[1] = Real::of(1L, P);
        if (with_c) C[2] = Real::of(1L, P);
    } else {
        RealJet term = RealJet::constant(Real::of(1L, P), order); // z^n P_n
        A = RealJet::constant(Real::of(0L, P), order);
        const Real target = ctx.tail_target();
        // geometric comparison ratio with margin 0.1
        const Real ratio = (az + Real::of(make_rational(1, 10), P)) /
                           Real::of(make_rational(11, 10), P);
        const Real one = Real::of(1L, P);
        Real prev_norm = Real::of(0L, P);
        long n = 0;
        const long burn_in = 20;
        const long max_terms = 400000;
        while (true) {
            RealJet shift = RealJet::variable(Real::of(n, P), order);
            RealJet bn = term * shift;
            A = A + term;
            B = B + bn;
            if (with_c) C = C + bn * shift;
            Real norm = jet_sup_norm(with_c ? bn * shift : bn);
            if (n >= burn_in) {
                bool decaying = !prev_norm.is_zero() && norm <= ratio * prev_norm;
                if (decaying && norm * ratio / (one - ratio) < target) {
                    out.tail_bound = norm * ratio / (one - ratio);
                    break;
                }
            }
            prev_norm = norm;
            if (++n > max_terms) throw error("component summation did not converge");
            term = term * step_ratio_real(fam, n - 1, order, P) * z;
        }
    }

    for (int i = 0; i < order; ++i) {
        out.a.push_back(A[i]);
        out.b.push_back(B[i]);
        if (with_c) out.c.push_back(C[i]);
    }
    return out;
}

std::pair<Real, Real> clausen_alpha(const Rational& s, const Real& z, const PrecisionContext& ctx) {
    const int P = ctx.internal_bits();
    Real az = abs(z);
    if (az >= Real::of(make_rational(95, 100), P))
        throw domain_error("clausen series refused for |z| >= 0.95");
    const Rational p1 = s / 2;
    const Rational p2 = (Rational(1) - s) / 2;
    RealJet acc = RealJet::constant(Real::of(0L, P), 2);
    RealJet term = RealJet::constant(Real::of(1L, P), 2);
    const Real target = ctx.tail_target();
    const Real ratio = (az + Real::of(make_rational(1, 10), P)) / Real::of(make_rational(11, 10), P);
    const Real one = Real::of(1L, P);
    long n = 0;
    while (true) {
        acc = acc + term;
        Real norm = jet_sup_norm(term);
        if (n >= 20 && norm * ratio / (one - ratio) < target) break;
        if (z.is_zero()) break;
        RealJet num = RealJet::variable(Real::of(p1 + n, P), 2) * RealJet::variable(Real::of(p2 + n, P), 2);
        RealJet dinv = jet_inv(RealJet::variable(Real::of(n + 1, P), 2));
        term = term * num * dinv * dinv * z;
        if (++n > 400000) throw error("clausen summation did not converge");
    }
    return {acc[0], acc[1]};
}

namespace {

Real det2(const Real& a, const Real& b, const Real& c, const Real& d) { return a * d - b * c; }

Real det3(const std::vector<Real>& a, const std::vector<Real>& b, const std::vector<Real>& c,
          int i, int j, int k) {
    return a[i] * det2(b[j], c[j], b[k], c[k]) - b[i] * det2(a[j], c[j], a[k], c[k]) +
           c[i] * det2(a[j], b[j], a[k], b[k]);
}

// residual of |value - target| with the sqrt-branch sign recorded
void branch_residual(RelationReport& rep, const std::string& name, const Real& value,
                     const Real& target) {
    Real plus = abs(value - target);
    Real minus = abs(value + target);
    if (plus <= minus) {
        rep.residuals[name] = plus;
        rep.signs[name] = 1;
    } else {
        rep.residuals[name] = minus;
        rep.signs[name] = -1;
    }
}

} // namespace

RelationReport relation_residuals(const ComponentVector& cv) {
    RelationReport rep;
    const int P = cv.z.prec();
    const Real one = Real::of(1L, P);
    const Real inv1z = one / (one - cv.z);
    const Real sq1z = sqrt(one - cv.z);
    const auto& a = cv.a;
    const auto& b = cv.b;

    if (cv.family.kind == FamilyKind::F32) {
        rep.residuals["a1sq"] = abs(a[1] * a[1] - ldexp2(a[0] * a[2], 1));
        rep.residuals["abb"] = abs(a[1] * b[1] - a[0] * b[2] - a[2] * b[0]);
        rep.residuals["b1sq"] = abs(b[1] * b[1] - ldexp2(b[0] * b[2], 1) - inv1z);
        branch_residual(rep, "M0", det2(a[1], b[1], a[2], b[2]), a[2] / sq1z);
        branch_residual(rep, "M1", det2(a[0], b[0], a[2], b[2]), a[1] / sq1z);
        branch_residual(rep, "M2", det2(a[0], b[0], a[1], b[1]), a[0] / sq1z);
    } else if (cv.family.kind == FamilyKind::F54) {
        const auto& c = cv.c;
        auto quad = [&](const std::vector<Real>& x) {
            return ldexp2(x[0] * x[4] - x[1] * x[3], 1) + x[2] * x[2];
        };
        auto mixed = [&](const std::vector<Real>& x, const std::vector<Real>& y) {
            return x[0] * y[4] + x[4] * y[0] - x[1] * y[3] - x[3] * y[1] + x[2] * y[2];
        };
        rep.residuals["a-quadratic"] = abs(quad(a));
        rep.residuals["b-quadratic"] = abs(quad(b));
        rep.residuals["c-quadratic"] = abs(quad(c) - inv1z);
        rep.residuals["ab-paren"] = abs(mixed(a, b));
        rep.residuals["ac-paren"] = abs(mixed(a, c));
        rep.residuals["bc-paren"] = abs(mixed(b, c));

        std::vector<Real> u, v, w;
        for (int j = 0; j < 5; ++j) {
            u.push_back(det2(a[0], b[0], a[j], b[j]));
            v.push_back(det2(a[0], c[0], a[j], c[j]));
            w.push_back(det2(b[0], c[0], b[j], c[j]));
        }
        auto quad3 = [&](const std::vector<Real>& x) {
            return x[2] * x[2] - ldexp2(x[1] * x[3], 1);
        };
        auto mixed3 = [&](const std::vector<Real>& x, const std::vector<Real>& y) {
            return x[2] * y[2] - x[1] * y[3] - y[1] * x[3];
        };
        rep.residuals["u-quadratic"] = abs(quad3(u));
        rep.residuals["v-quadratic"] = abs(quad3(v) - a[0] * a[0] * inv1z);
        rep.residuals["w-quadratic"] = abs(quad3(w) - b[0] * b[0] * inv1z);
        rep.residuals["uv-paren"] = abs(mixed3(u, v));
        rep.residuals["uw-paren"] = abs(mixed3(u, w));
        rep.residuals["vw-paren"] = abs(mixed3(v, w) - a[0] * b[0] * inv1z);

        branch_residual(rep, "M3", det3(a, b, c, 0, 1, 2), u[1] / sq1z);
        branch_residual(rep, "M2", det3(a, b, c, 0, 1, 3), u[2] / sq1z);
        branch_residual(rep, "M1", det3(a, b, c, 0, 2, 3), u[3] / sq1z);
        branch_residual(rep, "M0", det3(a, b, c, 1, 2, 3), u[4] / sq1z);

        Real lhs = (u[1] * v[4] - u[4] * v[1]) / (u[1] * v[2] - u[2] * v[1]);
        Real rhs = det2(a[1], b[1], a[2], b[2]) / det2(a[0], b[0], a[1], b[1]);
        rep.residuals["J-ratio"] = abs(lhs - rhs);
    } else {
        throw unsupported_error("no relation theory for the 7F6 family");
    }

    rep.max_residual = Real::of(0L, P);
    for (const auto& kv : rep.residuals) rep.max_residual = max(rep.max_residual, kv.second);
    return rep;
}

Rational picard_fuchs_residual(const SeriesFamily& fam, int N) {
    if (N < 2) throw config_error("picard_fuchs_residual needs N >= 2");
    const int order = fam.jet_order();
    const auto params = fam.upper_parameters();
    RationalJet A = RationalJet::constant(Rational(1), order);
    Rational worst(0);
    for (int n = 0; n < N; ++n) {
        RationalJet next = A * step_ratio_rational(fam, n, order);
        // ((n+1)I + X)^m next  vs  prod ((n+alpha)I + X) A
        RationalJet lhs = next;
        RationalJet den = RationalJet::variable(Rational(n + 1), order);
        for (size_t i = 0; i < params.size(); ++i) lhs = lhs * den;
        RationalJet rhs = A;
        for (const auto& p : params) rhs = rhs * RationalJet::variable(p + n, order);
        for (int i = 0; i < order; ++i) {
            Rational d = lhs[i] - rhs[i];
            if (d < 0) d = -d;
            if (d > worst) worst = d;
        }
        A = next;
    }
    return worst;
}

Real scalar_series_sum(const SeriesFamily& fam, const Real& z, const std::vector<Real>& poly,
                       const PrecisionContext& ctx, double zcap) {
    const int P = ctx.internal_bits();
    Real az = abs(z);
    if (az >= Real::of(zcap, P)) throw domain_error("scalar series diverges at this z");
    const auto params = fam.upper_parameters();
    Real term = Real::of(1L, P);
    Real acc = Real::of(0L, P);
    const Real target = ctx.tail_target();
    const Real one = Real::of(1L, P);
    // margin shrinks as |z| approaches 1 so the bound stays < 1
    Real margin = (one - az) / 2L;
    if (margin > Real::of(make_rational(1, 10), P)) margin = Real::of(make_rational(1, 10), P);
    const Real ratio = (az + margin) / (one + margin);
    long n = 0;
    while (true) {
        Real np = Real::of(0L, P);
        Real npow = one;
        for (const auto& pc : poly) {
            np += pc * npow;
            npow *= static_cast<long>(n);
        }
        acc += term * np;
        Real bound = abs(term) * max(one, abs(np)) * ratio / (one - ratio);
        if (n >= 20 && bound < target) break;
        if (z.is_zero()) break;
        Real fac = one;
        for (const auto& p : params) fac *= Real::of(p + n, P);
        term = term * fac * pow_si(Real::of(n + 1, P), -static_cast<long>(params.size())) * z;
        if (++n > 2000000) throw error("scalar series did not converge");
    }
    return acc;
}

} // namespace ramajet
