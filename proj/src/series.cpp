#include "ramajet/series.hpp"

namespace ramajet {

SeriesValue evaluate_with_tail(const RealSeries& f, const Real& x) {
    const int n = f.trunc();
    const int prec = std::max(f[0].prec(), x.prec());
    Real acc = Real::of(0L, prec);
    Real xp = Real::of(1L, prec);
    Real last = Real::of(0L, prec);
    Real prev = Real::of(0L, prec);
    for (int i = 0; i <= n; ++i) {
        Real term = f[i] * xp;
        acc += term;
        if (i == n - 1) prev = abs(term);
        if (i == n) last = abs(term);
        if (i < n) xp *= x;
    }
    // Geometric extrapolation from the last observed ratio, padded by 2x.
    SeriesValue out{acc, Real::of(0L, prec), true};
    if (last.is_zero()) return out;
    if (prev.is_zero() || last >= prev) {
        out.tail_estimate = Real::of(1L, prec); // no decay observed
        out.trusted = false;
        return out;
    }
    Real r = ldexp2(last / prev, 1);
    if (r >= Real::of(1L, prec)) {
        out.tail_estimate = Real::of(1L, prec);
        out.trusted = false;
        return out;
    }
    out.tail_estimate = last * r / (1L - r);
    return out;
}

RealSeries to_real_series(const RationalSeries& f, int prec_bits) {
    std::vector<Real> c;
    c.reserve(f.trunc() + 1);
    for (int i = 0; i <= f.trunc(); ++i) c.push_back(Real::of(f[i], prec_bits));
    return RealSeries(std::move(c));
}

} // namespace ramajet
