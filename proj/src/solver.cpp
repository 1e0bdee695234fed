#include "ramajet/solver.hpp"

#include <future>
#include <memory>

#include "ramajet/constants.hpp"
#include "ramajet/modular.hpp"

namespace ramajet {

namespace {

// N(X): (1/pi)I - (k pi/2) X^2 for F32; (1/pi^2)I - (k/2) X^2 + (j pi^2/24) X^4
// for F54, split into a j-free part and the dj coefficient jet.
struct RhsJet {
    RealJet base;
    Real x4_jcoeff; // coefficient of X^4 per unit j (F54)
};

RhsJet rhs_jet(const SeriesFamily& fam, const Rational& k, const std::optional<Rational>& j,
               const PrecisionContext& ctx) {
    const int P = ctx.internal_bits();
    const int order = fam.jet_order();
    const Real pi = pi_value(P);
    RealJet n = RealJet::constant(Real::of(0L, P), order);
    Real jc = Real::of(0L, P);
    if (fam.kind == FamilyKind::F32) {
        n[0] = 1L / pi;
        n[2] = -ldexp2(Real::of(k, P) * pi, -1);
    } else if (fam.kind == FamilyKind::F54) {
        n[0] = 1L / (pi * pi);
        n[2] = -ldexp2(Real::of(k, P), -1);
        jc = pi * pi / 24L;
        if (j) n[4] = Real::of(*j, P) * jc;
    } else {
        throw unsupported_error("no right-hand side for 7F6");
    }
    return {std::move(n), std::move(jc)};
}

Real quadratic_form(const std::vector<Real>& m, int order) {
    // order 3: m1^2 - 2 m0 m2 ; order 5: 2 m0 m4 - 2 m1 m3 + m2^2
    if (order == 3) return m[1] * m[1] - ldexp2(m[0] * m[2], 1);
    return ldexp2(m[0] * m[4] - m[1] * m[3], 1) + m[2] * m[2];
}

struct H2Eval {
    Real value;     // H2 (or H1 for F32)
    Real deriv;     // dH/dz
    ComponentVector cv;
};

// Mirror-map exponent H and dH/dz from numerically summed components.
// F32: H1 = a1/a0; F54: H2 = u2/u1. Derivatives come from the ladder
// a_i' = (b_i - a_{i-1})/z, b_i' = (c_i - b_{i-1})/z.
H2Eval h_top_numeric(const SeriesFamily& fam, const Real& z, int u, const PrecisionContext& ctx) {
    ComponentVector cv = evaluate_components(fam, z, u, ctx);
    const auto& a = cv.a;
    const auto& b = cv.b;
    if (fam.kind == FamilyKind::F32) {
        Real a0p = b[0] / z;
        Real a1p = (b[1] - a[0]) / z;
        Real h = a[1] / a[0];
        Real hp = (a1p * a[0] - a[1] * a0p) / (a[0] * a[0]);
        return {h, hp, std::move(cv)};
    }
    const auto& c = cv.c;
    Real a0p = b[0] / z, a1p = (b[1] - a[0]) / z, a2p = (b[2] - a[1]) / z;
    Real b0p = c[0] / z, b1p = (c[1] - b[0]) / z, b2p = (c[2] - b[1]) / z;
    Real u1 = a[0] * b[1] - a[1] * b[0];
    Real u2 = a[0] * b[2] - a[2] * b[0];
    Real u1p = a0p * b[1] + a[0] * b1p - a1p * b[0] - a[1] * b0p;
    Real u2p = a0p * b[2] + a[0] * b2p - a2p * b[0] - a[2] * b0p;
    Real h = u2 / u1;
    Real hp = (u2p * u1 - u2 * u1p) / (u1 * u1);
    return {h, hp, std::move(cv)};
}

// Newton inversion of ln(u q) = H(z) + ln(uz) - nu0 for z with sign u,
// starting from seed (|seed| in (0, 0.95)).
Real invert_q_map(const SeriesFamily& fam, const Real& target_lnrho, const Real& nu0, int u,
                  Real z, const PrecisionContext& ctx) {
    const int P = ctx.internal_bits();
    const Real tol = ldexp2(Real::of(1L, P), -(P - 16));
    for (int it = 0; it < 200; ++it) {
        H2Eval h = h_top_numeric(fam, z, u, ctx);
        Real g = h.value + log(z * u) - nu0 - target_lnrho;
        Real gp = h.deriv + 1L / z;
        Real step = g / gp;
        Real znew = z - step;
        // stay inside the convergence region
        const Real cap = Real::of(make_rational(94, 100), P);
        if (abs(znew) >= cap) znew = (u > 0) ? cap - (cap - abs(z)) / 2L : -(cap - (cap - abs(z)) / 2L);
        if (znew * u <= Real::of(0L, P)) znew = z / 2L;
        Real delta = abs(znew - z);
        z = znew;
        if (delta <= tol * max(abs(z), Real::of(1L, P))) return z;
    }
    throw inconsistency_error("q-map Newton iteration did not converge");
}

void recognize_solution(RamanujanSolution& sol, const Integer& bound, const PrecisionContext& ctx) {
    sol.z_rec = recognize(sol.z, bound, RecognitionMode::quadratic, ctx);
    sol.a_rec = recognize(sol.a, bound, RecognitionMode::quadratic, ctx);
    sol.b_rec = recognize(sol.b, bound, RecognitionMode::quadratic, ctx);
    sol.tau_rec = recognize(sol.tau, bound, RecognitionMode::quadratic, ctx);
    sol.tau2_rec = recognize(sol.tau2, bound, RecognitionMode::rational, ctx);
    if (sol.family.kind == FamilyKind::F54) {
        sol.c_rec = recognize(sol.c, bound, RecognitionMode::quadratic, ctx);
        sol.j_rec = recognize(sol.j, bound, RecognitionMode::rational, ctx);
    }
}

// The T/U/z(q) series depend only on (family, order, precision); solves over
// a k-grid reuse them. Per-thread single-slot memo keeps solves pure.
const NumericQSeries& cached_numeric_q_series(const SeriesFamily& fam, int NT,
                                              const Real& exp_nu0, const PrecisionContext& ctx) {
    thread_local std::string memo_key;
    thread_local std::unique_ptr<NumericQSeries> memo;
    std::string key =
        fam.describe() + "#" + std::to_string(NT) + "#" + std::to_string(ctx.internal_bits());
    if (!memo || memo_key != key) {
        memo = std::make_unique<NumericQSeries>(numeric_q_series(fam, NT, exp_nu0, ctx));
        memo_key = key;
    }
    return *memo;
}

} // namespace

std::optional<Rational> cot2_rational(const Rational& s) {
    if (s == make_rational(1, 2)) return Rational(0);
    if (s == make_rational(1, 3) || s == make_rational(2, 3)) return make_rational(1, 3);
    if (s == make_rational(1, 4) || s == make_rational(3, 4)) return Rational(1);
    if (s == make_rational(1, 6) || s == make_rational(5, 6)) return Rational(3);
    return std::nullopt;
}

MSpectrum m_spectrum(const SeriesFamily& fam, const Rational& k, const std::optional<Rational>& j,
                     const PrecisionContext& ctx) {
    const int P = ctx.internal_bits();
    const int order = fam.jet_order();
    MSpectrum out;
    out.family = fam;
    out.k = k;
    out.j = j;

    RealJet ginv = jet_inv(pochhammer_x_at_zero(fam, ctx));
    RhsJet rhs = rhs_jet(fam, k, j, ctx);
    RealJet m = ginv * rhs.base;
    for (int i = 0; i < order; ++i) out.m.push_back(m[i]);
    out.m4_jcoeff = (fam.kind == FamilyKind::F54) ? ginv[0] * rhs.x4_jcoeff : Real::of(0L, P);

    const Real m0 = out.m[0];
    out.nu0_direct = out.m[1] / m0;
    out.nu1_direct = ldexp2(out.m[1] * out.m[1] / (m0 * m0), -1) - out.m[2] / m0;
    out.exp_nu0 = exp(out.nu0_direct);

    const Real pi = pi_value(P);
    const Real gamma = euler_gamma_value(P);
    const Real ln2v = log(Real::of(2L, P));
    auto psi = [&](const Rational& x) { return polygamma(0, x, ctx); };
    auto psi2 = [&](const Rational& x) { return polygamma(2, x, ctx); };
    const Rational one(1);

    Real cot2s = cot_pi(fam.s, ctx);
    cot2s *= cot2s;

    if (fam.kind == FamilyKind::F32) {
        out.nu2_direct = Real(P);
        out.nu2_closed = Real(P);
        out.nu0_closed = (gamma + psi(fam.s) - ln2v) + (gamma + psi(one - fam.s) - ln2v);
        out.nu1_closed = Real(P); // no printed closed form for F32 nu1
        out.tau2_direct_const = quadratic_form(out.m, order);
        out.tau2_direct_jcoeff = Real::of(0L, P);
        out.tau2_closed_const = Real::of(k + 1, P) + cot2s;
        out.tau2_closed_jcoeff = Real::of(0L, P);
        if (auto c2 = cot2_rational(fam.s)) out.tau2_closed_rational = k + 1 + *c2;
    } else {
        out.nu2_direct = out.m[1] * out.m[1] * out.m[1] / (m0 * m0 * m0) / 3L -
                         out.m[1] * out.m[2] / (m0 * m0) + out.m[3] / m0;
        Real cot2t = cot_pi(fam.t, ctx);
        cot2t *= cot2t;
        out.nu0_closed = (psi(fam.s) + psi(one - fam.s) + ldexp2(gamma, 1) - ln2v) +
                         (psi(fam.t) + psi(one - fam.t) + ldexp2(gamma, 1) - ln2v);
        out.nu1_closed =
            ldexp2(pi * pi, -1) * (Real::of(k, P) + Real::of(make_rational(5, 3), P) + cot2s + cot2t);
        Real z3(P);
        mpfr_zeta_ui(z3.raw(), 3, MPFR_RNDN);
        out.nu2_closed = (ldexp2(z3, 2) - psi2(fam.s) - psi2(one - fam.s) - psi2(fam.t) -
                          psi2(one - fam.t)) / 6L;

        // tau^2 = 2 m0 m4 - 2 m1 m3 + m2^2 is affine in j through m4
        out.tau2_direct_const = quadratic_form(out.m, order);
        out.tau2_direct_jcoeff = ldexp2(m0 * out.m4_jcoeff, 1);
        if (j) {
            // m[4] already contains the j part; pull the affine split anyway
            Real j_r = Real::of(*j, P);
            out.tau2_direct_const -= j_r * out.tau2_direct_jcoeff;
        }
        Real closed = Real::of(k * k, P) / 4L +
                      Real::of(k, P) * Real::of(make_rational(5, 3), P) + Real::of(1L, P) +
                      cot2s * cot2t + Real::of(k + 1, P) * (cot2s + cot2t);
        out.tau2_closed_const = closed;
        out.tau2_closed_jcoeff = Real::of(make_rational(1, 12), P);
        auto c2s = cot2_rational(fam.s);
        auto c2t = cot2_rational(fam.t);
        if (c2s && c2t && j) {
            out.tau2_closed_rational = *j / 12 + k * k / 4 + k * make_rational(5, 3) + 1 +
                                       (*c2s) * (*c2t) + (k + 1) * (*c2s + *c2t);
        }
    }
    // record whether the printed nu0 closed form carries the direct sign
    Real diff_plus = abs(out.nu0_closed - out.nu0_direct);
    Real diff_minus = abs(out.nu0_closed + out.nu0_direct);
    out.nu0_closed_sign = diff_plus <= diff_minus ? 1 : -1;
    return out;
}

std::vector<Real> m_actual(const SeriesFamily& fam, const Rational& k, const Real& j,
                           const Real& z, int u, const PrecisionContext& ctx) {
    const int order = fam.jet_order();
    std::optional<Rational> none;
    RhsJet rhs = rhs_jet(fam, k, none, ctx);
    if (fam.kind == FamilyKind::F54) rhs.base[4] = j * rhs.x4_jcoeff;
    RealJet m = jet_pow_base(z * u, -1, order) * jet_inv(pochhammer_x_at_zero(fam, ctx)) * rhs.base;
    std::vector<Real> out;
    out.reserve(order);
    for (int i = 0; i < order; ++i) out.push_back(m[i]);
    return out;
}

RamanujanSolution solve_3f2(const Rational& s, const Rational& k, int u,
                            const PrecisionContext& ctx, const Integer& denominator_bound,
                            bool recognize_outputs) {
    SeriesFamily fam = make_f32(s);
    const int P = ctx.internal_bits();
    const Real pi = pi_value(P);
    MSpectrum ms = m_spectrum(fam, k, std::nullopt, ctx);

    RamanujanSolution sol;
    sol.family = fam;
    sol.u = u;
    sol.k = k;

    Real tau2 = ms.tau2_closed_rational ? Real::of(*ms.tau2_closed_rational, P)
                                        : ms.tau2_closed_const;
    if (tau2.sign() <= 0) throw domain_error("k + 1 + cot^2(pi s) must be positive");
    sol.tau2 = tau2;
    sol.tau = sqrt(tau2);
    Real lnrho = -(pi * sol.tau);
    Real rho = exp(lnrho);
    sol.q = (u > 0) ? rho : -rho;
    if (rho > Real::of(make_rational(5, 100), P))
        throw no_solution_error("|q| > 0.05: outside the trusted series region");

    // Boundary instance: s = 1/2, tau = 1 sits exactly at z = 1 where the
    // component sums no longer converge; the theta closed form supplies the
    // limit values and the series identity is checked in its analytic form.
    if (s == make_rational(1, 2) && u > 0 && ms.tau2_closed_rational &&
        *ms.tau2_closed_rational == 1) {
        // z(q) = 1 exactly here, where the component sums converge too slowly
        // to use. The theta closed form supplies z, a, b, and the series
        // identity is checked in its analytic limit form
        // a theta3^4 + tau (4q theta3'/theta3) = 1/pi.
        sol.boundary_z1 = true;
        ClosedForm3F2 cf = closed_form_3f2_half(k, ctx);
        sol.z = cf.z;
        sol.a = cf.a;
        sol.b = sol.tau * sqrt(abs(1L - cf.z)); // = 0 in the limit
        ThetaValues th = theta(rho, ctx);
        Real y0 = pow_si(th.theta3, 4);
        Real gq = ldexp2(th.qd_theta3 / th.theta3, 2); // lim z sqrt(1-z) y0'
        sol.series_check = abs(sol.a * y0 + sol.tau * gq - 1L / pi);
        sol.residuals["system-row-0"] = sol.series_check;
        if (recognize_outputs) recognize_solution(sol, denominator_bound, ctx);
        return sol;
    }

    // Seed from the truncated reversion, then Newton on the q-map.
    MirrorMap mm = mirror_map(fam, 24);
    Real z_seed;
    {
        auto zq = to_real_series(mm.z_of_q, P);
        SeriesValue sv = evaluate_with_tail(zq, sol.q);
        z_seed = sv.value;
        Real az = abs(z_seed);
        if (!sv.trusted || az >= Real::of(make_rational(9, 10), P))
            z_seed = Real::of(make_rational(u, 2), P); // fall back to mid-region
    }
    Real z = invert_q_map(fam, lnrho, ms.nu0_direct, u, z_seed, ctx);
    sol.z = z;

    ComponentVector cv = evaluate_components(fam, z, u, ctx);
    const Real one = Real::of(1L, P);
    sol.b = sol.tau * sqrt(one - z);
    std::vector<Real> m = m_actual(fam, k, Real::of(0L, P), z, u, ctx);
    sol.a = (m[0] - sol.b * cv.b[0]) / cv.a[0];

    sol.residuals["system-row-0"] = abs(cv.a[0] * sol.a + cv.b[0] * sol.b - m[0]);
    sol.residuals["system-row-1"] = abs(cv.a[1] * sol.a + cv.b[1] * sol.b - m[1]);
    sol.residuals["system-row-2"] = abs(cv.a[2] * sol.a + cv.b[2] * sol.b - m[2]);
    sol.residuals["b2-identity"] = abs(sol.b * sol.b / (one - z) - sol.tau2);
    sol.series_check = abs(scalar_series_sum(fam, z, {sol.a, sol.b}, ctx) - 1L / pi);

    Real thresh = ctx.recognition_tolerance();
    for (const auto& kv : sol.residuals)
        if (kv.second > thresh)
            throw inconsistency_error("3F2 residual " + kv.first + " above threshold");

    if (recognize_outputs) recognize_solution(sol, denominator_bound, ctx);
    return sol;
}

RamanujanSolution solve_5f4(const Rational& s, const Rational& t, const Rational& k, int u,
                            const PrecisionContext& ctx, const Integer& denominator_bound,
                            bool recognize_outputs) {
    SeriesFamily fam = make_f54(s, t);
    const int P = ctx.internal_bits();
    const Real pi = pi_value(P);
    const Real pi2 = pi * pi;
    MSpectrum ms = m_spectrum(fam, k, std::nullopt, ctx);

    RamanujanSolution sol;
    sol.family = fam;
    sol.u = u;
    sol.k = k;

    const int NT = std::max(192, P / 3 + 96);
    const NumericQSeries& nq = cached_numeric_q_series(fam, NT, ms.exp_nu0, ctx);

    // f(L) = L^3/6 - nu1 L - nu2 - T(u e^L); scan the trusted part of the
    // region for the single sign change, then bisect + Newton.
    const Real rho_min = ldexp2(Real::of(1L, P), ctx.working_bits >= 512 ? -40 : -27); // ~1e-12 / ~1e-8
    const Real rho_max = Real::of(make_rational(5, 100), P);
    const Real trust_eps = ldexp2(Real::of(1L, P), -(ctx.working_bits / 2));

    auto f_of_L = [&](const Real& L, bool* trusted) {
        Real rho = exp(L);
        SeriesValue tv = evaluate_with_tail(nq.T, (u > 0) ? rho : -rho);
        if (trusted) *trusted = tv.trusted && tv.tail_estimate < trust_eps;
        return L * L * L / 6L - ms.nu1_direct * L - ms.nu2_direct - tv.value;
    };
    auto u_at = [&](const Real& L) {
        Real rho = exp(L);
        SeriesValue uv = evaluate_with_tail(nq.U, (u > 0) ? rho : -rho);
        return uv.value;
    };

    const int scan_points = 400;
    Real Llo = log(rho_min), Lhi = log(rho_max);
    Real bracket_lo(P), bracket_hi(P);
    bool have_bracket = false;
    {
        Real prevL(P), prevF(P);
        bool have_prev = false;
        int changes = 0;
        for (int i = 0; i <= scan_points; ++i) {
            Real L = Llo + (Lhi - Llo) * i / static_cast<long>(scan_points);
            bool trusted = false;
            Real fv = f_of_L(L, &trusted);
            if (!trusted) continue; // beyond the series' reliable range
            if (have_prev && prevF.sign() != fv.sign() && fv.sign() != 0) {
                ++changes;
                if (!have_bracket) {
                    bracket_lo = prevL;
                    bracket_hi = L;
                    have_bracket = true;
                }
            }
            prevL = L;
            prevF = fv;
            have_prev = true;
        }
        if (!have_bracket)
            throw no_solution_error("q-equation: no sign change in the trusted region");
        if (changes > 1)
            throw inconsistency_error("q-equation: multiple sign changes in the trusted region");
    }

    Real L = ldexp2(bracket_lo + bracket_hi, -1);
    {
        Real flo = f_of_L(bracket_lo, nullptr);
        for (int i = 0; i < 80; ++i) {
            Real fm = f_of_L(L, nullptr);
            if (fm.sign() == flo.sign()) bracket_lo = L;
            else bracket_hi = L;
            L = ldexp2(bracket_lo + bracket_hi, -1);
        }
        const Real step_tol = ldexp2(Real::of(1L, P), -(P - 16));
        for (int i = 0; i < 60; ++i) {
            Real fv = f_of_L(L, nullptr);
            Real fp = ldexp2(L * L, -1) - ms.nu1_direct - u_at(L);
            Real step = fv / fp;
            L = L - step;
            if (abs(step) <= step_tol * max(abs(L), Real::of(1L, P))) break;
        }
    }

    Real rho = exp(L);
    sol.q = (u > 0) ? rho : -rho;

    // tau and j
    Real Uv = u_at(L);
    sol.tau = (ldexp2(L * L, -1) - Uv - ms.nu1_direct) / pi2;
    if (sol.tau.sign() <= 0) throw inconsistency_error("negative tau on this branch");
    sol.tau2 = sol.tau * sol.tau;
    sol.j = (sol.tau2 - ms.tau2_closed_const) / ms.tau2_closed_jcoeff;

    // z from the mirror series, refined against the numeric q-map
    Real z_seed;
    {
        SeriesValue sv = evaluate_with_tail(nq.z_of_q, sol.q);
        z_seed = sv.value;
        if (!sv.trusted || abs(z_seed) >= Real::of(make_rational(9, 10), P))
            z_seed = Real::of(make_rational(u, 4), P);
    }
    Real z = invert_q_map(fam, L, ms.nu0_direct, u, z_seed, ctx);
    sol.z = z;

    const Real one = Real::of(1L, P);
    sol.c = sol.tau * sqrt(one - z);

    ComponentVector cv = evaluate_components(fam, z, u, ctx);
    std::vector<Real> m = m_actual(fam, k, sol.j, z, u, ctx);
    const auto& av = cv.a;
    const auto& bv = cv.b;
    const auto& cvv = cv.c;
    Real r0 = m[0] - cvv[0] * sol.c;
    Real r1 = m[1] - cvv[1] * sol.c;
    Real det = av[0] * bv[1] - av[1] * bv[0];
    sol.a = (r0 * bv[1] - r1 * bv[0]) / det;
    sol.b = (av[0] * r1 - av[1] * r0) / det;

    for (int i = 0; i < 5; ++i) {
        sol.residuals["system-row-" + std::to_string(i)] =
            abs(av[i] * sol.a + bv[i] * sol.b + cvv[i] * sol.c - m[i]);
    }
    sol.residuals["c2-identity"] = abs(sol.c * sol.c / (one - z) - sol.tau2);
    sol.series_check =
        abs(scalar_series_sum(fam, z, {sol.a, sol.b, sol.c}, ctx) - 1L / pi2);

    Real thresh = ctx.recognition_tolerance();
    for (const auto& kv : sol.residuals)
        if (kv.second > thresh)
            throw inconsistency_error("5F4 residual " + kv.first + " above threshold");
    if (sol.series_check > thresh)
        throw inconsistency_error("5F4 scalar series check above threshold");

    if (recognize_outputs) recognize_solution(sol, denominator_bound, ctx);
    return sol;
}

ProbeReport probe_conjectures(const SeriesFamily& fam, const std::vector<Rational>& ks,
                              const PrecisionContext& ctx, const Integer& denominator_bound) {
    if (fam.kind != FamilyKind::F54) throw unsupported_error("probe runs on 5F4 families");
    ProbeReport rep;
    rep.family = fam;
    std::vector<std::future<ProbeEntry>> futs;
    for (const auto& k : ks) {
        futs.push_back(std::async(std::launch::async, [&, k]() {
            ProbeEntry e;
            e.k = k;
            for (int u : {-1, +1}) {
                try {
                    RamanujanSolution s = solve_5f4(fam.s, fam.t, k, u, ctx, denominator_bound);
                    e.solved = true;
                    e.u = u;
                    e.tau2_text = s.tau2_rec.recognized() ? s.tau2_rec.to_text() : s.tau2.str(30);
                    e.j_text = s.j_rec.recognized() ? s.j_rec.to_text() : s.j.str(30);
                    e.z_text = s.z_rec.recognized() ? s.z_rec.to_text() : s.z.str(30);
                    e.a_text = s.a_rec.recognized() ? s.a_rec.to_text() : s.a.str(30);
                    e.b_text = s.b_rec.recognized() ? s.b_rec.to_text() : s.b.str(30);
                    e.c_text = s.c_rec.recognized() ? s.c_rec.to_text() : s.c.str(30);
                    e.fully_recognized = s.tau2_rec.recognized() && s.j_rec.recognized() &&
                                         s.z_rec.recognized() && s.a_rec.recognized() &&
                                         s.b_rec.recognized() && s.c_rec.recognized();
                    break;
                } catch (const error& ex) {
                    e.failure = ex.what();
                }
            }
            return e;
        }));
    }
    for (auto& f : futs) rep.entries.push_back(f.get());
    return rep;
}

} // namespace ramajet
