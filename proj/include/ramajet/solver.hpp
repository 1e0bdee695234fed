#pragma once

#include <map>
#include <optional>
#include <vector>

#include "ramajet/hyperseries.hpp"
#include "ramajet/qexpansion.hpp"
#include "ramajet/recognize.hpp"

namespace ramajet {

// Right-hand-side data built from (k, j): the m-jet with ln(uz) set to 0 and
// the z-independent combinations nu0, nu1, nu2, tau^2, both computed directly
// from the jet and from the closed forms as printed. When j is absent the
// j-dependent entries are affine in j and returned as (const, coeff) pairs.
struct MSpectrum {
    SeriesFamily family;
    Rational k;
    std::optional<Rational> j;

    std::vector<Real> m;   // m-jet at ln(uz) = 0; for F54 without j, m[4] is the j-free part
    Real m4_jcoeff;        // dm4/dj (F54), zero otherwise

    Real nu0_direct, nu1_direct;
    Real nu2_direct;       // F54 only (order-5 jet), NaN for F32
    Real nu0_closed, nu1_closed, nu2_closed;
    int nu0_closed_sign = 0; // +1 if closed form matches direct, -1 if negated

    Real tau2_direct_const, tau2_direct_jcoeff;
    Real tau2_closed_const, tau2_closed_jcoeff;
    // Exact rational closed-form tau^2 when every cot^2 term is rational
    // (s, t in {1/2, 1/3, 1/4, 1/6}) and j is given.
    std::optional<Rational> tau2_closed_rational;

    Real exp_nu0; // e^{nu0_direct}
};

MSpectrum m_spectrum(const SeriesFamily& fam, const Rational& k, const std::optional<Rational>& j,
                     const PrecisionContext& ctx);

// cot^2(pi s) as an exact rational when s is one of the classical values.
std::optional<Rational> cot2_rational(const Rational& s);

// Full m-jet at the solved point, including the (uz)^{-X} factor.
std::vector<Real> m_actual(const SeriesFamily& fam, const Rational& k, const Real& j,
                           const Real& z, int u, const PrecisionContext& ctx);

struct RamanujanSolution {
    SeriesFamily family;
    int u = 1;
    Rational k;

    Real q, z, tau, tau2, a, b, c, j;
    RecognizedConstant z_rec, a_rec, b_rec, c_rec, tau_rec, tau2_rec, j_rec;

    std::map<std::string, Real> residuals;
    Real series_check;         // |sum - 1/pi^m|
    bool boundary_z1 = false;  // s = 1/2, k = 0: z = 1 limit instance
};

// 3F2 solve: tau = sqrt(k+1+cot^2 pi s), q = u e^{-pi tau}, z by Newton on the
// q-map against numerically summed components, b = tau sqrt(1-z), a from the
// first system row; rows 2-3 and the scalar series are verification.
// recognize_outputs = false skips constant recognition (grid scans and
// finite-difference probes that only need the numeric values).
RamanujanSolution solve_3f2(const Rational& s, const Rational& k, int u,
                            const PrecisionContext& ctx, const Integer& denominator_bound,
                            bool recognize_outputs = true);

// 5F4 solve per the q-equation: root-find rho = uq in the trusted part of
// (rho_min, 0.05] on (1/6)ln^3 rho - nu1 ln rho - nu2 - T(u rho) = 0 with T
// from a truncated high-order series (geometric tail estimate); tau from the
// U-equation, j from the tau^2 closed form, z from the mirror series refined
// by Newton on the numeric q-map, c = tau sqrt(1-z), (a,b) by a 2x2 solve of
// the first two system rows. Remaining rows are verification residuals.
RamanujanSolution solve_5f4(const Rational& s, const Rational& t, const Rational& k, int u,
                            const PrecisionContext& ctx, const Integer& denominator_bound,
                            bool recognize_outputs = true);

struct ProbeEntry {
    Rational k;
    bool solved = false;
    std::string failure;
    int u = -1;
    std::string tau2_text, j_text, z_text, a_text, b_text, c_text;
    bool fully_recognized = false;
};

struct ProbeReport {
    SeriesFamily family;
    std::vector<ProbeEntry> entries;
};

// Purely observational: runs solve_5f4 on each k (u = -1 first, then +1) and
// records which outputs recognize as exact constants.
ProbeReport probe_conjectures(const SeriesFamily& fam, const std::vector<Rational>& ks,
                              const PrecisionContext& ctx, const Integer& denominator_bound);

} // namespace ramajet
