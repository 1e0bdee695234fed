#include "ramajet/jet.hpp"

#include <sstream>

namespace ramajet {

namespace {

template <typename S>
Jet<S> log1p_nilpotent(const Jet<S>& u) {
    // u nilpotent: log(1+u) = u - u^2/2 + u^3/3 - ...
    const int n = u.order();
    Jet<S> acc = u;
    Jet<S> p = u;
    for (int k = 2; k < n; ++k) {
        p = p * u;
        S coef = scalar_ops<S>::reciprocal(scalar_ops<S>::from_long(k % 2 == 0 ? -k : k, u[0]));
        acc = acc + p * coef;
    }
    return acc;
}

template <typename S>
Jet<S> strip_head(const Jet<S>& a) {
    Jet<S> r = a;
    r[0] = scalar_ops<S>::zero_like(a[0]);
    return r;
}

} // namespace

Jet<Rational> jet_exp(const Jet<Rational>& a) {
    if (a[0] != 0) throw domain_error("rational jet exp requires zero head");
    return jet_exp_nilpotent(a);
}

Jet<Real> jet_exp(const Jet<Real>& a) {
    Jet<Real> r = jet_exp_nilpotent(strip_head(a));
    if (!a[0].is_zero()) r = r * exp(a[0]);
    return r;
}

Jet<Rational> jet_log(const Jet<Rational>& a) {
    if (a[0] != 1) throw domain_error("rational jet log requires head exactly 1");
    return log1p_nilpotent(strip_head(a));
}

Jet<Real> jet_log(const Jet<Real>& a) {
    if (a[0].sign() <= 0) throw domain_error("jet log requires positive head");
    Jet<Real> u = strip_head(a) * (1L / a[0]);
    Jet<Real> r = log1p_nilpotent(u);
    r[0] = log(a[0]);
    return r;
}

RealJet jet_pow_base(const Real& w, int sign, int order) {
    if (w.sign() <= 0) throw domain_error("jet_pow_base requires w > 0");
    if (sign != 1 && sign != -1) throw domain_error("jet_pow_base sign must be +-1");
    Real l = log(w);
    if (sign < 0) l = -l;
    std::vector<Real> c;
    c.reserve(order);
    c.push_back(Real::of(1L, w.prec()));
    Real p = Real::of(1L, w.prec());
    for (int k = 1; k < order; ++k) {
        p = p * l / static_cast<long>(k);
        c.push_back(p);
    }
    return RealJet(std::move(c));
}

RealJet jet_pochhammer_frac(const Rational& s, int order, const PrecisionContext& ctx) {
    if (order > 7) throw unsupported_error("jet_pochhammer_frac capped at order 7");
    if (s <= 0) throw domain_error("jet_pochhammer_frac requires s > 0");
    const int P = ctx.internal_bits();
    std::vector<Real> c;
    c.reserve(order);
    c.push_back(Real::of(0L, P));
    Rational kfact(1);
    for (int k = 1; k < order; ++k) {
        kfact *= k;
        c.push_back(polygamma(k - 1, s, ctx) / Real::of(kfact, P));
    }
    return jet_exp(RealJet(std::move(c)));
}

std::string jet_to_text(const RationalJet& a) {
    std::ostringstream os;
    for (int i = 0; i < a.order(); ++i) {
        if (i) os << " + ";
        os << to_string(a[i]);
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    return os.str();
}

std::string jet_to_text(const RealJet& a, size_t digits) {
    std::ostringstream os;
    for (int i = 0; i < a.order(); ++i) {
        if (i) os << " + ";
        os << a[i].str(digits);
        if (i == 1) os << "*X";
        if (i > 1) os << "*X^" << i;
    }
    return os.str();
}

} // namespace ramajet
