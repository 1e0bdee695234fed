#pragma once

#include "ramajet/rational.hpp"
#include "ramajet/real.hpp"

namespace ramajet {

// Jacobi theta values at nome q, 0 <= q <= 1/2, with the q d/dq derivatives
// from termwise differentiation of the defining sums.
struct ThetaValues {
    Real q;
    Real theta2, theta3, theta4;
    Real qd_theta2, qd_theta3, qd_theta4;
    long truncation_index = 0;
};

ThetaValues theta(const Real& q, const PrecisionContext& ctx);

// Elliptic lambda and alpha at q = e^{-pi tau}, tau > 0:
// lambda = theta2^4/theta3^4, alpha = (1/theta3^4)(1/pi - 4 tau (q/theta4) dtheta4/dq).
struct LambdaAlpha {
    Real lambda;
    Real alpha;
};
LambdaAlpha lambda_alpha(const Real& tau, const PrecisionContext& ctx);

// Theta-function closed form of the s = 1/2 solution at tau = sqrt(k+1):
// z = 4 lambda (1-lambda), b = sqrt(k+1)(2 lambda - 1), a = alpha - sqrt(k+1) lambda.
// b carries the lambda-form branch sign (negative for tau > 1); callers
// compare through b^2 = (k+1)(1-z).
struct ClosedForm3F2 {
    Real z;
    Real a;
    Real b;
    Real tau;
    Real q;
};
ClosedForm3F2 closed_form_3f2_half(const Rational& k, const PrecisionContext& ctx);

} // namespace ramajet
