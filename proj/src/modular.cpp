#include "ramajet/modular.hpp"

#include <cmath>

#include "ramajet/constants.hpp"
#include "ramajet/error.hpp"

namespace ramajet {

ThetaValues theta(const Real& q, const PrecisionContext& ctx) {
    const int P = ctx.internal_bits();
    ThetaValues out{q,        Real::of(0L, P), Real::of(1L, P), Real::of(1L, P),
                    Real::of(0L, P), Real::of(0L, P), Real::of(0L, P), 0};
    if (q.is_zero()) return out;
    if (q.sign() < 0 || q > Real::of(make_rational(1, 2), P))
        throw domain_error("theta out of region: need 0 <= q <= 1/2");

    // q^{n^2} < 2^{-(bits)} cutoff
    double qd = q.to_double();
    long nmax = static_cast<long>(
                    std::ceil(std::sqrt(static_cast<double>(P) * 0.6931471805599453 /
                                        std::log(1.0 / qd)))) + 2;
    out.truncation_index = nmax;

    const Real q2 = q * q;
    // integer-square sums for theta3/theta4
    Real p = q;          // q^{n^2}
    Real step = q * q2;  // q^{2n+1} at n = 1
    for (long n = 1; n <= nmax; ++n) {
        Real t = ldexp2(p, 1);
        Real td = t * static_cast<long>(n * n);
        out.theta3 += t;
        out.qd_theta3 += td;
        if (n % 2) {
            out.theta4 -= t;
            out.qd_theta4 -= td;
        } else {
            out.theta4 += t;
            out.qd_theta4 += td;
        }
        p *= step;
        step *= q2;
    }
    // half-integer sums for theta2: exponents (n+1/2)^2
    Real quarter_root = sqrt(sqrt(q));
    Real ph = quarter_root; // q^{(n+1/2)^2} at n = 0
    Real steph = q2;        // q^{2n+2} at n = 0
    for (long n = 0; n <= nmax; ++n) {
        Real t = ldexp2(ph, 1);
        Real e = Real::of(make_rational(2 * n + 1, 2), P); // n + 1/2
        out.theta2 += t;
        out.qd_theta2 += t * e * e;
        ph *= steph;
        steph *= q2;
    }
    return out;
}

LambdaAlpha lambda_alpha(const Real& tau, const PrecisionContext& ctx) {
    if (tau.sign() <= 0) throw domain_error("lambda_alpha requires tau > 0");
    const int P = ctx.internal_bits();
    const Real pi = pi_value(P);
    Real q = exp(-(pi * tau));
    ThetaValues th = theta(q, ctx);
    Real t3_4 = pow_si(th.theta3, 4);
    Real lambda = pow_si(th.theta2, 4) / t3_4;
    Real alpha = (1L / pi - ldexp2(tau * th.qd_theta4 / th.theta4, 2)) / t3_4;
    return {lambda, alpha};
}

ClosedForm3F2 closed_form_3f2_half(const Rational& k, const PrecisionContext& ctx) {
    if (k + 1 <= 0) throw domain_error("closed form needs k + 1 > 0");
    const int P = ctx.internal_bits();
    Real tau = sqrt(Real::of(k + 1, P));
    LambdaAlpha la = lambda_alpha(tau, ctx);
    const Real one = Real::of(1L, P);
    ClosedForm3F2 out{ldexp2(la.lambda * (one - la.lambda), 2),
                      la.alpha - tau * la.lambda,
                      tau * (ldexp2(la.lambda, 1) - one),
                      tau,
                      exp(-(pi_value(P) * tau))};
    return out;
}

} // namespace ramajet
