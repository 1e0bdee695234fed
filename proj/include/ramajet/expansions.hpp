#pragma once

#include <optional>

#include "ramajet/recognize.hpp"
#include "ramajet/solver.hpp"

namespace ramajet {

// Componentwise residuals of the jet identity
//   sum_n z^n P_n(X) (aI + b(nI+X) + c(nI+X)^2) = (uz)^{-X} P_X^{-1}(0) N(X)
// for the given data; n entries, one per component.
std::vector<Real> verify_expansion(const SeriesFamily& fam, const Real& z, int u, const Real& a,
                                   const Real& b, const std::optional<Real>& c, const Rational& k,
                                   const std::optional<Rational>& j, const PrecisionContext& ctx);

// Signature extracted from S = P_X(0) (uz)^X sum_n z^n P_n(X) poly(nI+X):
// even components carry 1/pi^m, -k..., j..., -l...; odd components are
// reported as residuals, never asserted.
struct ExpansionSignature {
    SeriesFamily family;
    int order = 3;
    Real k, j, l;
    RecognizedConstant k_rec, j_rec, l_rec;
    std::vector<Real> odd_residuals; // |S_1|, |S_3|, |S_5| as applicable
    Real head_residual;              // |S_0 - 1/pi^m|
    Real scalar_residual;            // |scalar series - 1/pi^m|
};

// poly holds the polynomial coefficients (a, b, c[, d]): length 2 for F32,
// 3 for F54, 4 for F76. Refuses extraction when the scalar identity fails.
ExpansionSignature extract_signature(const SeriesFamily& fam, const Real& z, int u,
                                     const std::vector<Real>& poly, const PrecisionContext& ctx,
                                     const Integer& denominator_bound);

} // namespace ramajet
