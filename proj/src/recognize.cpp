#include "ramajet/recognize.hpp"

#include <array>
#include <vector>

#include "ramajet/error.hpp"

namespace ramajet {

std::string RecognizedConstant::to_text() const {
    switch (kind) {
        case RecognitionKind::rational: return to_string(rational_value);
        case RecognitionKind::quadratic: return "sqrt(" + to_string(sqrt_argument) + ")";
        case RecognitionKind::quadratic_affine: {
            std::string out = to_string(affine_p);
            if (affine_q >= 0) out += " + " + to_string(affine_q);
            else out += " - " + to_string(-affine_q);
            out += "*sqrt(" + std::to_string(affine_d) + ")";
            return out;
        }
        case RecognitionKind::unrecognized: return "unrecognized";
    }
    return "unrecognized";
}

Real RecognizedConstant::reconstruct(int prec_bits) const {
    switch (kind) {
        case RecognitionKind::rational: return Real::of(rational_value, prec_bits);
        case RecognitionKind::quadratic: return sqrt(Real::of(sqrt_argument, prec_bits));
        case RecognitionKind::quadratic_affine:
            return Real::of(affine_p, prec_bits) +
                   Real::of(affine_q, prec_bits) * sqrt(Real::of(affine_d, prec_bits));
        case RecognitionKind::unrecognized: break;
    }
    throw domain_error("cannot reconstruct an unrecognized constant");
}

bool rational_convergent_within(const Real& x, const Integer& bound, const Real& tol, Rational& out) {
    if (!x.is_finite()) return false;
    Rational target = to_rational_exact(x);
    // Continued fraction of the exact dyadic target; convergent denominators
    // increase, so the first acceptable hit has the smallest denominator.
    Integer p_prev(0), q_prev(1), p_cur(1), q_cur(0);
    Rational rest = target;
    const int prec = x.prec();
    for (int step = 0; step < 100000; ++step) {
        Integer a;
        mpz_fdiv_q(a.get_mpz_t(), rest.get_num().get_mpz_t(), rest.get_den().get_mpz_t());
        Integer p_next = a * p_cur + p_prev;
        Integer q_next = a * q_cur + q_prev;
        if (q_next > bound) return false;
        Rational conv = make_rational(p_next, q_next);
        if (abs(x - Real::of(conv, prec)) <= tol) {
            out = conv;
            return true;
        }
        Rational frac = rest - Rational(a);
        if (frac == 0) return false; // expansion terminated without a hit
        rest = Rational(1) / frac;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
    }
    return false;
}

namespace {

bool is_square_free(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

bool rational_is_perfect_square(const Rational& r, Rational& root) {
    if (r < 0) return false;
    if (mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
        mpz_perfect_square_p(r.get_den().get_mpz_t())) {
        Integer n, d;
        mpz_sqrt(n.get_mpz_t(), r.get_num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), r.get_den().get_mpz_t());
        root = make_rational(n, d);
        return true;
    }
    return false;
}

using LatVec = std::array<Integer, 4>;

Rational dotq(const LatVec& a, const LatVec& b) {
    Integer acc(0);
    for (int i = 0; i < 4; ++i) acc += a[i] * b[i];
    return Rational(acc);
}

Integer round_rational(const Rational& r) {
    Rational shifted = r + make_rational(1, 2);
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), shifted.get_num().get_mpz_t(), shifted.get_den().get_mpz_t());
    return fl;
}

// Plain LLL (delta = 3/4) on three vectors in Z^4; dimensions are tiny so the
// Gram-Schmidt data is recomputed from scratch whenever the basis changes.
void lll3(std::array<LatVec, 3>& b) {
    std::array<std::array<Rational, 3>, 3> mu;
    std::array<Rational, 3> B;
    auto gram_schmidt = [&]() {
        std::array<std::array<Rational, 3>, 3> g; // <b_i, b_j>
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j <= i; ++j) g[i][j] = dotq(b[i], b[j]);
        // mu and B from the Gram matrix (Cholesky-style).
        for (int i = 0; i < 3; ++i) {
            B[i] = g[i][i];
            for (int j = 0; j < i; ++j) {
                Rational acc = g[i][j];
                for (int k = 0; k < j; ++k) acc -= mu[i][k] * mu[j][k] * B[k];
                mu[i][j] = (B[j] == 0) ? Rational(0) : acc / B[j];
                B[i] -= mu[i][j] * mu[i][j] * B[j];
            }
        }
    };
    gram_schmidt();
    int k = 1;
    int guard = 0;
    while (k < 3 && ++guard < 4000) {
        for (int j = k - 1; j >= 0; --j) {
            Integer r = round_rational(mu[k][j]);
            if (r != 0) {
                for (int t = 0; t < 4; ++t) b[k][t] -= r * b[j][t];
                gram_schmidt();
            }
        }
        Rational lhs = B[k];
        Rational rhs = (make_rational(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gram_schmidt();
            k = std::max(1, k - 1);
        }
    }
}

} // namespace

RecognizedConstant recognize(const Real& x, const Integer& denominator_bound, RecognitionMode mode,
                             const PrecisionContext& ctx) {
    if (denominator_bound < 1) throw config_error("denominator bound must be >= 1");
    RecognizedConstant out;
    out.certificate_residual = Real(64);
    if (!x.is_finite()) return out;
    const int P = ctx.internal_bits();
    const Real tol = ctx.recognition_tolerance();

    Rational r;
    if (rational_convergent_within(x, denominator_bound, tol, r)) {
        out.kind = RecognitionKind::rational;
        out.rational_value = r;
        out.certificate_residual = abs(x - Real::of(r, P));
        return out;
    }
    if (mode == RecognitionMode::rational) return out;

    // sqrt(r) with rational r: recognize x^2.
    if (x.sign() > 0) {
        Real x2 = x * x;
        Rational r2;
        if (rational_convergent_within(x2, denominator_bound, tol, r2) && r2 > 0) {
            Rational root;
            if (rational_is_perfect_square(r2, root)) {
                // degenerate: x itself was rational but missed the direct test
                Real res = abs(x - Real::of(root, P));
                if (res <= tol) {
                    out.kind = RecognitionKind::rational;
                    out.rational_value = root;
                    out.certificate_residual = res;
                    return out;
                }
            } else {
                Real res = abs(x - sqrt(Real::of(r2, P)));
                if (res <= tol) {
                    out.kind = RecognitionKind::quadratic;
                    out.sqrt_argument = r2;
                    out.certificate_residual = res;
                    return out;
                }
            }
        }
    }

    // p + q sqrt(d): search for a short integer relation A + B sqrt(d) + C x = 0.
    // 160 scale bits comfortably separate true relations (residual ~2^-160+32)
    // from the height-capped noise floor (~2^-96); hits are re-verified at
    // full precision anyway.
    const long scale_bits = std::min({ctx.working_bits, P - 16, 160});
    const Integer height_cap = Integer(1) << 32;
    for (long d = 2; d <= 1000; ++d) {
        if (!is_square_free(d)) continue;
        Real sd = sqrt(Real::of(d, P));
        std::array<LatVec, 3> basis;
        auto scaled = [&](const Real& v) {
            return round_to_integer(ldexp2(v, scale_bits));
        };
        basis[0] = {Integer(1), Integer(0), Integer(0), scaled(Real::of(1L, P))};
        basis[1] = {Integer(0), Integer(1), Integer(0), scaled(sd)};
        basis[2] = {Integer(0), Integer(0), Integer(1), scaled(x)};
        lll3(basis);
        for (const auto& v : basis) {
            const Integer& A = v[0];
            const Integer& B = v[1];
            const Integer& C = v[2];
            if (C == 0 || B == 0) continue;
            if (abs(A) > height_cap || abs(B) > height_cap || abs(C) > height_cap) continue;
            if (abs(C) > denominator_bound) continue;
            Rational p = make_rational(-A, C);
            Rational q = make_rational(-B, C);
            Real res = abs(x - (Real::of(p, P) + Real::of(q, P) * sd));
            if (res <= tol) {
                out.kind = RecognitionKind::quadratic_affine;
                out.affine_p = p;
                out.affine_q = q;
                out.affine_d = d;
                out.certificate_residual = res;
                return out;
            }
        }
    }
    return out;
}

} // namespace ramajet
