#pragma once

#include <vector>

#include "ramajet/jet.hpp"

namespace ramajet {

// Truncated power series in z: coefficients of z^0 .. z^N for truncation
// order N. Binary operations require equal truncation; shortening is explicit
// via truncate_to.
template <typename C>
class PowerSeries {
  public:
    PowerSeries() = default;
    explicit PowerSeries(std::vector<C> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw shape_error("series needs at least the constant term");
    }

    static PowerSeries zeros_like(const C& model, int trunc) {
        std::vector<C> c;
        c.reserve(trunc + 1);
        C zero = model;
        zero = zero - model; // zero with the model's shape/precision
        for (int i = 0; i <= trunc; ++i) c.push_back(zero);
        return PowerSeries(std::move(c));
    }

    int trunc() const { return static_cast<int>(c_.size()) - 1; }
    const C& operator[](int i) const { return c_[i]; }
    C& operator[](int i) { return c_[i]; }
    const std::vector<C>& coeffs() const { return c_; }

    PowerSeries truncate_to(int n) const {
        if (n > trunc()) throw shape_error("cannot extend a series by truncation");
        return PowerSeries(std::vector<C>(c_.begin(), c_.begin() + n + 1));
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        check(a, b);
        PowerSeries r = a;
        for (int i = 0; i <= r.trunc(); ++i) r.c_[i] += b.c_[i];
        return r;
    }
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        check(a, b);
        PowerSeries r = a;
        for (int i = 0; i <= r.trunc(); ++i) r.c_[i] -= b.c_[i];
        return r;
    }
    friend PowerSeries operator*(const PowerSeries& a, const C& s) {
        PowerSeries r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }

  private:
    static void check(const PowerSeries& a, const PowerSeries& b) {
        if (a.trunc() != b.trunc()) throw shape_error("series truncation mismatch");
    }
    std::vector<C> c_;
};

using RationalSeries = PowerSeries<Rational>;
using RealSeries = PowerSeries<Real>;

template <typename C>
PowerSeries<C> series_mul(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    if (a.trunc() != b.trunc()) throw shape_error("series truncation mismatch");
    const int n = a.trunc();
    auto r = PowerSeries<C>::zeros_like(a[0], n);
    for (int i = 0; i <= n; ++i) {
        if (scalar_ops<C>::is_zero(a[i])) continue;
        for (int j = 0; i + j <= n; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

// a / b with b[0] != 0 (long division).
template <typename C>
PowerSeries<C> series_div(const PowerSeries<C>& a, const PowerSeries<C>& b) {
    if (a.trunc() != b.trunc()) throw shape_error("series truncation mismatch");
    if (scalar_ops<C>::is_zero(b[0])) throw domain_error("series division by non-unit");
    const int n = a.trunc();
    C inv0 = scalar_ops<C>::reciprocal(b[0]);
    auto q = PowerSeries<C>::zeros_like(a[0], n);
    for (int i = 0; i <= n; ++i) {
        C acc = a[i];
        for (int k = 1; k <= i; ++k) acc -= b[k] * q[i - k];
        q[i] = acc * inv0;
    }
    return q;
}

// Multiplicative inverse, head must be nonzero.
template <typename C>
PowerSeries<C> series_invert(const PowerSeries<C>& a) {
    auto one = PowerSeries<C>::zeros_like(a[0], a.trunc());
    one[0] = scalar_ops<C>::one_like(a[0]);
    return series_div(one, a);
}

// exp of a series with zero constant term: g' = f' g recurrence.
template <typename C>
PowerSeries<C> series_exp(const PowerSeries<C>& f) {
    if (!scalar_ops<C>::is_zero(f[0])) throw domain_error("series exp requires zero constant term");
    const int n = f.trunc();
    auto g = PowerSeries<C>::zeros_like(f[0], n);
    g[0] = scalar_ops<C>::one_like(f[0]);
    for (int m = 1; m <= n; ++m) {
        C acc = f[0]; // zero
        for (int k = 1; k <= m; ++k) {
            C t = f[k] * g[m - k];
            t *= scalar_ops<C>::from_long(k, f[0]);
            acc += t;
        }
        g[m] = acc * scalar_ops<C>::reciprocal(scalar_ops<C>::from_long(m, f[0]));
    }
    return g;
}

// log of a series with constant term 1: (log f)' = f'/f recurrence.
template <typename C>
PowerSeries<C> series_log1(const PowerSeries<C>& f) {
    C one = scalar_ops<C>::one_like(f[0]);
    C diff = f[0] - one;
    if (!scalar_ops<C>::is_zero(diff)) throw domain_error("series log requires constant term 1");
    const int n = f.trunc();
    auto g = PowerSeries<C>::zeros_like(f[0], n);
    for (int m = 1; m <= n; ++m) {
        C acc = f[m] * scalar_ops<C>::from_long(m, f[0]);
        for (int k = 1; k < m; ++k) {
            C t = g[k] * f[m - k];
            t *= scalar_ops<C>::from_long(k, f[0]);
            acc -= t;
        }
        g[m] = acc * scalar_ops<C>::reciprocal(scalar_ops<C>::from_long(m, f[0]));
    }
    return g;
}

// z d/dz: c_n -> n c_n.
template <typename C>
PowerSeries<C> series_q_derivative(const PowerSeries<C>& f) {
    auto r = f;
    for (int i = 0; i <= f.trunc(); ++i) {
        C t = f[i] * scalar_ops<C>::from_long(i, f[0]);
        r[i] = t;
    }
    return r;
}

// d/dz, truncation drops by one.
template <typename C>
PowerSeries<C> series_derivative(const PowerSeries<C>& f) {
    if (f.trunc() < 1) throw shape_error("cannot differentiate a constant-only series");
    std::vector<C> c;
    c.reserve(f.trunc());
    for (int i = 1; i <= f.trunc(); ++i) c.push_back(f[i] * scalar_ops<C>::from_long(i, f[0]));
    return PowerSeries<C>(std::move(c));
}

// f(g(z)) for g with zero constant term (Horner).
template <typename C>
PowerSeries<C> series_compose(const PowerSeries<C>& f, const PowerSeries<C>& g) {
    if (!scalar_ops<C>::is_zero(g[0])) throw domain_error("series composition requires g(0) = 0");
    if (f.trunc() != g.trunc()) throw shape_error("series truncation mismatch");
    const int n = f.trunc();
    auto r = PowerSeries<C>::zeros_like(f[0], n);
    r[0] = f[n];
    for (int i = n - 1; i >= 0; --i) {
        r = series_mul(r, g);
        r[0] += f[i];
    }
    return r;
}

// Compositional inverse of f with f(0) = 0, f'(0) != 0, by Lagrange
// inversion: [q^n] f^{-1} = (1/n) [z^{n-1}] (z/f)^n.
template <typename C>
PowerSeries<C> series_revert(const PowerSeries<C>& f) {
    if (!scalar_ops<C>::is_zero(f[0]))
        throw domain_error("series reversion requires zero constant term");
    if (scalar_ops<C>::is_zero(f[1]))
        throw domain_error("series reversion requires nonzero linear term");
    const int n = f.trunc();
    // R = z/f(z) as a series (shift f down one slot, then invert)
    auto shifted = PowerSeries<C>::zeros_like(f[0], n);
    for (int i = 0; i < n; ++i) shifted[i] = f[i + 1];
    shifted[n] = f[0]; // zero
    auto R = series_invert(shifted);
    auto g = PowerSeries<C>::zeros_like(f[0], n);
    auto Rpow = R;
    for (int k = 1; k <= n; ++k) {
        g[k] = Rpow[k - 1] * scalar_ops<C>::reciprocal(scalar_ops<C>::from_long(k, f[0]));
        if (k < n) Rpow = series_mul(Rpow, R);
    }
    return g;
}

// Horner evaluation of a real series at a real point, with a geometric tail
// estimate from the trailing term ratios (infinite if the tail looks
// divergent at this point).
struct SeriesValue {
    Real value;
    Real tail_estimate;
    bool trusted;
};

SeriesValue evaluate_with_tail(const RealSeries& f, const Real& x);

RealSeries to_real_series(const RationalSeries& f, int prec_bits);

} // namespace ramajet
