#pragma once

#include <optional>

#include "ramajet/hyperseries.hpp"

namespace ramajet {

// H-functions as exact rational z-series. F32 has the single H1 = a1/a0;
// F54 has H2, H1, H0 (ratios u2/u1, u3/u1, u4/u1 of the component
// determinants) plus the ratio J = (a1 b2 - a2 b1)/u1 used by U.
struct HFunctions {
    SeriesFamily family;
    std::optional<RationalSeries> h0;
    std::optional<RationalSeries> h1;
    RationalSeries h_top; // H1 for F32, H2 for F54: the mirror-map exponent
    std::optional<RationalSeries> j_ratio;
};
HFunctions h_functions(const SeriesFamily& fam, int N);

// Mirror map data. When exp(nu0) is rational the series live in the true
// variable q; otherwise in the scaled variable q~ = e^{nu0} q, flagged by
// exact_scale = false (scale is then 1 in the series and the numeric
// conversion is left to the caller).
struct MirrorMap {
    SeriesFamily family;
    bool exact_scale = true;
    Rational scale;          // e^{nu0} when rational
    RationalSeries exp_h;    // e^{H} as a z-series
    RationalSeries q_of_z;   // z e^{H} / scale
    RationalSeries z_of_q;   // compositional inverse
};
MirrorMap mirror_map(const SeriesFamily& fam, int N);

// T, U, K as q-series (or q~-series) with exact rational coefficients;
// F54 families only. U is computed from its own definition (H2^2/2 - J
// composed with z(q)), not as q dT/dq, so the derivative identity stays an
// honest check.
struct TUKSeries {
    RationalSeries T;
    RationalSeries U;
    RationalSeries K;
};
TUKSeries t_u_k_series(const SeriesFamily& fam, int N);

// Numeric instantiation of the same pipeline at high order for the solver:
// series in the true q with Real coefficients, using the supplied numeric
// e^{nu0}.
struct NumericQSeries {
    RealSeries T;
    RealSeries U;
    RealSeries z_of_q;
};
NumericQSeries numeric_q_series(const SeriesFamily& fam, int N, const Real& exp_nu0,
                                const PrecisionContext& ctx);

} // namespace ramajet
