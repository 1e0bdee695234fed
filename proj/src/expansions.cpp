#include "ramajet/expansions.hpp"

#include "ramajet/constants.hpp"

namespace ramajet {

namespace {

// sum_n z^n P_n(X) * poly(nI + X) with the same tail policy as the component
// evaluator; works for all three jet orders.
RealJet lhs_jet_sum(const SeriesFamily& fam, const Real& z, const std::vector<Real>& poly,
                    const PrecisionContext& ctx) {
    const int order = fam.jet_order();
    const int P = ctx.internal_bits();
    Real az = abs(z);
    if (az >= Real::of(make_rational(95, 100), P))
        throw domain_error("expansion sum refused for |z| >= 0.95");
    const auto params = fam.upper_parameters();

    RealJet acc = RealJet::constant(Real::of(0L, P), order);
    RealJet term = RealJet::constant(Real::of(1L, P), order);
    const Real target = ctx.tail_target();
    const Real ratio = (az + Real::of(make_rational(1, 10), P)) / Real::of(make_rational(11, 10), P);
    const Real one = Real::of(1L, P);
    Real prev_norm(P);
    bool have_prev = false;
    long n = 0;
    while (true) {
        RealJet shift = RealJet::variable(Real::of(n, P), order);
        RealJet polyjet = RealJet::constant(poly[0], order);
        RealJet spow = shift;
        for (size_t d = 1; d < poly.size(); ++d) {
            polyjet = polyjet + spow * poly[d];
            if (d + 1 < poly.size()) spow = spow * shift;
        }
        RealJet contrib = term * polyjet;
        acc = acc + contrib;
        Real norm = abs(contrib[0]);
        for (int i = 1; i < order; ++i) norm = max(norm, abs(contrib[i]));
        if (n >= 20 && have_prev && norm <= ratio * prev_norm &&
            norm * ratio / (one - ratio) < target)
            break;
        if (z.is_zero()) break;
        prev_norm = norm;
        have_prev = true;
        RealJet num = RealJet::constant(Real::of(1L, P), order);
        for (const auto& p : params) num = num * RealJet::variable(Real::of(p + n, P), order);
        RealJet dinv = jet_inv(RealJet::variable(Real::of(n + 1, P), order));
        RealJet step = num;
        for (size_t i = 0; i < params.size(); ++i) step = step * dinv;
        term = term * step * z;
        if (++n > 400000) throw error("expansion summation did not converge");
    }
    return acc;
}

} // namespace

std::vector<Real> verify_expansion(const SeriesFamily& fam, const Real& z, int u, const Real& a,
                                   const Real& b, const std::optional<Real>& c, const Rational& k,
                                   const std::optional<Rational>& j, const PrecisionContext& ctx) {
    if (fam.kind == FamilyKind::F54 && (!c || !j))
        throw config_error("5F4 expansion needs both c and j");
    if (fam.kind == FamilyKind::F76) throw unsupported_error("use extract_signature for 7F6");
    const int P = ctx.internal_bits();
    std::vector<Real> poly = {a, b};
    if (c) poly.push_back(*c);
    RealJet lhs = lhs_jet_sum(fam, z, poly, ctx);
    Real jr = j ? Real::of(*j, P) : Real::of(0L, P);
    std::vector<Real> rhs = m_actual(fam, k, jr, z, u, ctx);
    std::vector<Real> res;
    for (int i = 0; i < fam.jet_order(); ++i) res.push_back(abs(lhs[i] - rhs[i]));
    return res;
}

ExpansionSignature extract_signature(const SeriesFamily& fam, const Real& z, int u,
                                     const std::vector<Real>& poly, const PrecisionContext& ctx,
                                     const Integer& denominator_bound) {
    const int order = fam.jet_order();
    const size_t expect = fam.kind == FamilyKind::F32 ? 2 : (fam.kind == FamilyKind::F54 ? 3 : 4);
    if (poly.size() != expect)
        throw config_error("polynomial degree does not match the family");
    const int P = ctx.internal_bits();
    const Real pi = pi_value(P);

    ExpansionSignature sig;
    sig.family = fam;
    sig.order = order;

    // the scalar identity is the gate for extraction
    int pi_power = order == 3 ? 1 : (order == 5 ? 2 : 3);
    Real target_head = pow_si(pi, -pi_power);
    sig.scalar_residual = abs(scalar_series_sum(fam, z, poly, ctx) - target_head);
    Real gate = ldexp2(Real::of(1L, P), -(ctx.working_bits / 4));
    if (sig.scalar_residual > gate)
        throw inconsistency_error("scalar series identity fails; refusing signature extraction");

    RealJet lhs = lhs_jet_sum(fam, z, poly, ctx);
    RealJet S = pochhammer_x_at_zero(fam, ctx) * jet_pow_base(z * u, +1, order) * lhs;

    sig.head_residual = abs(S[0] - target_head);
    sig.odd_residuals.push_back(abs(S[1]));
    if (order >= 5) sig.odd_residuals.push_back(abs(S[3]));
    if (order >= 7) sig.odd_residuals.push_back(abs(S[5]));

    sig.k = Real::of(0L, P);
    sig.j = Real::of(0L, P);
    sig.l = Real::of(0L, P);
    if (order == 3) {
        sig.k = -ldexp2(S[2], 1) / pi; // S2 = -k pi / 2
    } else if (order == 5) {
        sig.k = -ldexp2(S[2], 1);             // S2 = -k/2
        sig.j = S[4] * 24L / (pi * pi);       // S4 = j pi^2 / 24
    } else {
        sig.k = -ldexp2(S[2] * pi, 1);        // S2 = -k/(2 pi)
        sig.j = S[4] * 24L / pi;              // S4 = j pi / 24
        sig.l = -S[6] * 720L / (pi * pi * pi); // S6 = -l pi^3 / 720
    }
    sig.k_rec = recognize(sig.k, denominator_bound, RecognitionMode::rational, ctx);
    if (order >= 5) sig.j_rec = recognize(sig.j, denominator_bound, RecognitionMode::rational, ctx);
    if (order >= 7) sig.l_rec = recognize(sig.l, denominator_bound, RecognitionMode::rational, ctx);
    return sig;
}

} // namespace ramajet
