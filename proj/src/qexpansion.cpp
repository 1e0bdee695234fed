#include "ramajet/qexpansion.hpp"

namespace ramajet {

namespace {

template <typename C>
struct HSeriesData {
    std::optional<PowerSeries<C>> h0, h1;
    PowerSeries<C> h_top;
    std::optional<PowerSeries<C>> j_ratio;
};

template <typename C>
HSeriesData<C> build_h(const SeriesFamily& fam, const std::vector<std::vector<PowerSeries<C>>>& comps) {
    const auto& a = comps[0];
    const auto& b = comps[1];
    if (fam.kind == FamilyKind::F32) {
        return HSeriesData<C>{std::nullopt, std::nullopt, series_div(a[1], a[0]), std::nullopt};
    }
    auto det = [](const PowerSeries<C>& p, const PowerSeries<C>& q, const PowerSeries<C>& r,
                  const PowerSeries<C>& s) { return series_mul(p, s) - series_mul(q, r); };
    PowerSeries<C> u1 = det(a[0], a[1], b[0], b[1]);
    PowerSeries<C> u2 = det(a[0], a[2], b[0], b[2]);
    PowerSeries<C> u3 = det(a[0], a[3], b[0], b[3]);
    PowerSeries<C> u4 = det(a[0], a[4], b[0], b[4]);
    PowerSeries<C> jn = det(a[1], a[2], b[1], b[2]);
    return HSeriesData<C>{series_div(u4, u1), series_div(u3, u1), series_div(u2, u1),
                          series_div(jn, u1)};
}

template <typename C>
std::vector<std::vector<PowerSeries<C>>> scalar_components(const SeriesFamily&, int, int);

template <>
std::vector<std::vector<RationalSeries>> scalar_components<Rational>(const SeriesFamily& fam, int N,
                                                                     int) {
    return component_scalar_series(fam, N);
}

template <>
std::vector<std::vector<RealSeries>> scalar_components<Real>(const SeriesFamily& fam, int N,
                                                             int prec) {
    auto rat = component_scalar_series(fam, N);
    std::vector<std::vector<RealSeries>> out;
    for (const auto& group : rat) {
        std::vector<RealSeries> g;
        for (const auto& s : group) g.push_back(to_real_series(s, prec));
        out.push_back(std::move(g));
    }
    return out;
}

// q(z) = z e^{H} / scale and its reversion.
template <typename C>
std::pair<PowerSeries<C>, PowerSeries<C>> q_map(const PowerSeries<C>& h, const C& inv_scale) {
    const int N = h.trunc();
    auto eh = series_exp(h);
    auto qz = PowerSeries<C>::zeros_like(h[0], N);
    for (int n = 1; n <= N; ++n) qz[n] = eh[n - 1] * inv_scale;
    return {qz, series_revert(qz)};
}

} // namespace

HFunctions h_functions(const SeriesFamily& fam, int N) {
    if (N < 3) throw config_error("h_functions needs N >= 3");
    if (fam.kind == FamilyKind::F76) throw unsupported_error("no H-functions for 7F6");
    auto comps = scalar_components<Rational>(fam, N, 0);
    auto h = build_h(fam, comps);
    return HFunctions{fam, std::move(h.h0), std::move(h.h1), std::move(h.h_top),
                      std::move(h.j_ratio)};
}

MirrorMap mirror_map(const SeriesFamily& fam, int N) {
    if (N < 2) throw config_error("mirror_map needs N >= 2");
    auto hf = h_functions(fam, std::max(N, 3));
    auto h = hf.h_top.truncate_to(N);
    MirrorMap mm;
    mm.family = fam;
    auto scale = rational_nu0_scale(fam);
    mm.exact_scale = scale.has_value();
    mm.scale = scale.value_or(Rational(1));
    Rational inv_scale(Rational(1) / mm.scale);
    auto qm = q_map(h, inv_scale);
    mm.exp_h = series_exp(h);
    mm.q_of_z = std::move(qm.first);
    mm.z_of_q = std::move(qm.second);
    return mm;
}

TUKSeries t_u_k_series(const SeriesFamily& fam, int N) {
    if (fam.kind != FamilyKind::F54)
        throw unsupported_error("T/U/K series exist for 5F4 families only");
    auto comps = scalar_components<Rational>(fam, N, 0);
    auto h = build_h(fam, comps);
    const Rational sixth = make_rational(1, 6);
    const Rational half = make_rational(1, 2);
    auto h2sq = series_mul(h.h_top, h.h_top);
    auto t_z = series_mul(h2sq, h.h_top) * sixth - *h.h0;
    auto u_z = h2sq * half - *h.j_ratio;

    auto scale = rational_nu0_scale(fam);
    Rational inv_scale(Rational(1) / scale.value_or(Rational(1)));
    auto qm = q_map(h.h_top, inv_scale);
    const auto& z_of_q = qm.second;
    TUKSeries out{series_compose(t_z, z_of_q), series_compose(u_z, z_of_q),
                  PowerSeries<Rational>::zeros_like(Rational(0), N)};
    out.K = series_q_derivative(series_q_derivative(out.U));
    out.K[0] = Rational(-1);
    return out;
}

NumericQSeries numeric_q_series(const SeriesFamily& fam, int N, const Real& exp_nu0,
                                const PrecisionContext& ctx) {
    if (fam.kind != FamilyKind::F54)
        throw unsupported_error("numeric q-series exist for 5F4 families only");
    const int P = ctx.internal_bits() + 32;
    auto comps = scalar_components<Real>(fam, N, P);
    auto h = build_h(fam, comps);
    const Real sixth = Real::of(make_rational(1, 6), P);
    const Real half = Real::of(make_rational(1, 2), P);
    auto h2sq = series_mul(h.h_top, h.h_top);
    auto t_z = series_mul(h2sq, h.h_top) * sixth - *h.h0;
    auto u_z = h2sq * half - *h.j_ratio;
    auto qm = q_map(h.h_top, 1L / exp_nu0);
    return NumericQSeries{series_compose(t_z, qm.second), series_compose(u_z, qm.second),
                          qm.second};
}

} // namespace ramajet
