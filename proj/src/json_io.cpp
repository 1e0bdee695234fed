#include "ramajet/json_io.hpp"

namespace ramajet {

json decimal_json(const Real& v, size_t digits) {
    return json{{"decimal", v.str(digits)}, {"digits", digits}};
}

json value_json(const Real& v, const RecognizedConstant& rec, size_t digits) {
    switch (rec.kind) {
        case RecognitionKind::rational: return json(to_string(rec.rational_value));
        case RecognitionKind::quadratic: return json{{"sqrt", to_string(rec.sqrt_argument)}};
        case RecognitionKind::quadratic_affine:
            return json{{"p", to_string(rec.affine_p)},
                        {"q", to_string(rec.affine_q)},
                        {"d", rec.affine_d}};
        case RecognitionKind::unrecognized: break;
    }
    return decimal_json(v, digits);
}

json solution_json(const RamanujanSolution& sol, size_t digits) {
    json out;
    out["family"] = sol.family.describe();
    out["k"] = to_string(sol.k);
    out["u"] = sol.u;
    out["q"] = decimal_json(sol.q, digits);
    out["z"] = value_json(sol.z, sol.z_rec, digits);
    out["a"] = value_json(sol.a, sol.a_rec, digits);
    out["b"] = value_json(sol.b, sol.b_rec, digits);
    out["tau"] = value_json(sol.tau, sol.tau_rec, digits);
    out["tau2"] = value_json(sol.tau2, sol.tau2_rec, digits);
    if (sol.family.kind == FamilyKind::F54) {
        out["c"] = value_json(sol.c, sol.c_rec, digits);
        out["j"] = value_json(sol.j, sol.j_rec, digits);
    }
    json res;
    for (const auto& kv : sol.residuals) res[kv.first] = kv.second.str(3);
    out["residuals"] = res;
    out["series_check"] = sol.series_check.str(3);
    if (sol.boundary_z1) out["boundary"] = "z=1";
    return out;
}

json relation_json(const RelationReport& rep, size_t digits) {
    json res, signs;
    for (const auto& kv : rep.residuals) res[kv.first] = kv.second.str(3);
    for (const auto& kv : rep.signs) signs[kv.first] = kv.second;
    (void)digits;
    return json{{"residuals", res}, {"sqrt_branch_signs", signs}, {"max_residual", rep.max_residual.str(3)}};
}

namespace {
json rational_list(const RationalSeries& s, int from) {
    json arr = json::array();
    for (int i = from; i <= s.trunc(); ++i) arr.push_back(to_string(s[i]));
    return arr;
}
} // namespace

json mirror_json(const MirrorMap& mm, const std::optional<TUKSeries>& tuk) {
    json out;
    out["family"] = mm.family.describe();
    out["scale"] = mm.exact_scale ? json(to_string(mm.scale)) : json("numeric");
    if (!mm.exact_scale) out["variable"] = "q-tilde = exp(nu0) q";
    // e^{H} in powers of (z/scale): entry n is coeff(z^n) * scale^n
    json eh = json::array();
    Rational sp(1);
    for (int n = 0; n <= mm.exp_h.trunc(); ++n) {
        eh.push_back(to_string(mm.exp_h[n] * sp));
        sp *= mm.scale;
    }
    out["exp_h_scaled"] = eh;
    out["z_of_q"] = rational_list(mm.z_of_q, 1);
    // scale-normalized: z(q)/scale
    json zn = json::array();
    for (int n = 1; n <= mm.z_of_q.trunc(); ++n) zn.push_back(to_string(mm.z_of_q[n] / mm.scale));
    out["z_of_q_over_scale"] = zn;
    if (tuk) {
        out["T"] = rational_list(tuk->T, 1);
        out["U"] = rational_list(tuk->U, 1);
        out["K"] = rational_list(tuk->K, 0);
    }
    return out;
}

json signature_json(const ExpansionSignature& sig, size_t digits) {
    json out;
    out["family"] = sig.family.describe();
    out["order"] = sig.order;
    out["k"] = value_json(sig.k, sig.k_rec, digits);
    if (sig.order >= 5) out["j"] = value_json(sig.j, sig.j_rec, digits);
    if (sig.order >= 7) out["l"] = value_json(sig.l, sig.l_rec, digits);
    json odd = json::array();
    for (const auto& r : sig.odd_residuals) odd.push_back(r.str(3));
    out["odd_component_residuals"] = odd;
    out["head_residual"] = sig.head_residual.str(3);
    out["scalar_residual"] = sig.scalar_residual.str(3);
    return out;
}

json theta_json(const ThetaValues& th, size_t digits) {
    json out;
    out["q"] = th.q.str(digits);
    out["theta2"] = th.theta2.str(digits);
    out["theta3"] = th.theta3.str(digits);
    out["theta4"] = th.theta4.str(digits);
    out["truncation_index"] = th.truncation_index;
    // identity residuals
    Real r1 = abs(pow_si(th.theta3, 4) - pow_si(th.theta2, 4) - pow_si(th.theta4, 4));
    Real r2 = abs(ldexp2(th.qd_theta3 / th.theta3 - th.qd_theta4 / th.theta4, 2) -
                  pow_si(th.theta2, 4));
    Real r3 = abs(ldexp2(th.qd_theta2 / th.theta2 - th.qd_theta3 / th.theta3, 2) -
                  pow_si(th.theta4, 4));
    out["identity_residuals"] = json{{"squares", r1.str(3)},
                                     {"log_deriv_34", r2.str(3)},
                                     {"log_deriv_23", r3.str(3)}};
    return out;
}

json probe_json(const ProbeReport& rep) {
    json out;
    out["family"] = rep.family.describe();
    json arr = json::array();
    for (const auto& e : rep.entries) {
        json row;
        row["k"] = to_string(e.k);
        row["solved"] = e.solved;
        if (!e.solved) {
            row["failure"] = e.failure;
        } else {
            row["u"] = e.u;
            row["tau2"] = e.tau2_text;
            row["j"] = e.j_text;
            row["z"] = e.z_text;
            row["a"] = e.a_text;
            row["b"] = e.b_text;
            row["c"] = e.c_text;
            row["fully_recognized"] = e.fully_recognized;
        }
        arr.push_back(row);
    }
    out["entries"] = arr;
    return out;
}

} // namespace ramajet
