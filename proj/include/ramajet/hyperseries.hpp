#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ramajet/family.hpp"
#include "ramajet/series.hpp"

namespace ramajet {

// Numerically summed component values a_0..a_{n-1}, b_0..b_{n-1} (and c for
// 5F4) at a point z, |z| < 1, with the attached geometric tail bound of the
// summation.
struct ComponentVector {
    SeriesFamily family;
    Real z;
    int u = 1;
    std::vector<Real> a;
    std::vector<Real> b;
    std::vector<Real> c; // empty for F32/F76
    Real tail_bound;
};

// P_n(family, X) as an exact rational jet of the given order.
RationalJet p_jet(const SeriesFamily& fam, long n, int order);

// P_X(fam, 0) = prod_params (param)_X / (1)_X^m as a real jet of the family's
// order: the Pochhammer data entering the right-hand side of the expansions.
RealJet pochhammer_x_at_zero(const SeriesFamily& fam, const PrecisionContext& ctx);

// A, B (and C for 5F4) as z-power series with exact rational jet
// coefficients: A_n = P_n, B_n = P_n (nI+X), C_n = P_n (nI+X)^2.
struct ComponentSeries {
    PowerSeries<RationalJet> A;
    PowerSeries<RationalJet> B;
    PowerSeries<RationalJet> C; // trunc 0 placeholder unless 5F4
    bool has_c = false;
};
ComponentSeries component_series(const SeriesFamily& fam, int N);

// Scalar z-series of the individual components: out[0][i] is a_i(z), out[1][i]
// is b_i(z), out[2][i] is c_i(z) when present.
std::vector<std::vector<RationalSeries>> component_scalar_series(const SeriesFamily& fam, int N);

// Sums the component series at z. Requires 0 <= |z| < 0.95 (larger |z| is
// refused); z = 0 returns the n = 0 term exactly.
ComponentVector evaluate_components(const SeriesFamily& fam, const Real& z, int u,
                                    const PrecisionContext& ctx);

// Order-2 series with parameters s/2, (1-s)/2: returns (alpha0, alpha1).
std::pair<Real, Real> clausen_alpha(const Rational& s, const Real& z, const PrecisionContext& ctx);

// Named residuals of every component relation for the family, plus the
// recorded sign of each sqrt(1-z) identity (+1/-1 for whichever branch
// matched better).
struct RelationReport {
    std::map<std::string, Real> residuals;
    std::map<std::string, int> signs;
    Real max_residual;
};
RelationReport relation_residuals(const ComponentVector& cv);

// Exact-rational check of the hypergeometric recurrence
// ((n+1)I+X)^m A_{n+1} = prod_i ((n+alpha_i)I+X) A_n for n = 0..N-1.
// Returns the largest coefficient deviation (zero when the recurrence holds).
Rational picard_fuchs_residual(const SeriesFamily& fam, int N);

// sum_n z^n P_n^{(0)}(fam) * (poly[0] + poly[1] n + poly[2] n^2 + ...) as a
// plain scalar series. Used for the 1/pi^m checks; tolerates |z| up to
// zcap (< 1) since some cross-checks sit close to the boundary.
Real scalar_series_sum(const SeriesFamily& fam, const Real& z, const std::vector<Real>& poly,
                       const PrecisionContext& ctx, double zcap = 0.999);

} // namespace ramajet
