// Command-line front end: every computation the library exposes, with
// machine-readable JSON output. Exit codes: 0 success, 1 numerical failure,
// 2 usage error, 3 no solution in the trusted region.

#include <CLI11.hpp>

#include <iostream>

#include "ramajet/constants.hpp"
#include "ramajet/json_io.hpp"

using namespace ramajet;

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNoSolution = 3;

struct CommonOpts {
    int bits = 256;
    std::string denominator_bound = "1000000";
    bool json_out = false;
    size_t digits = 50;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--bits", c.bits, "working precision in bits (>= 64)");
    cmd->add_option("--denominator-bound", c.denominator_bound,
                    "largest denominator tried in recognition");
    cmd->add_flag("--json", c.json_out, "machine-readable JSON output");
    cmd->add_option("--digits", c.digits, "decimal digits for unrecognized values");
}

Integer parse_bound(const std::string& s) {
    Integer b;
    if (b.set_str(s, 10) != 0 || b < 1) throw config_error("bad denominator bound: " + s);
    return b;
}

int run_relations(const std::string& family, const std::string& z_text, const CommonOpts& c,
                  const std::string& threshold) {
    PrecisionContext ctx = make_context(c.bits);
    SeriesFamily fam = parse_family(family);
    Rational z = parse_rational(z_text);
    if (abs(Real::of(z, 64)) >= Real::of(1L, 64))
        throw config_error("relations needs |z| < 1");
    ComponentVector cv = evaluate_components(fam, Real::of(z, ctx.internal_bits()), z < 0 ? -1 : 1, ctx);
    RelationReport rep = relation_residuals(cv);
    Real thresh = Real::parse(threshold, ctx.internal_bits());
    if (c.json_out) {
        json out = relation_json(rep, c.digits);
        out["family"] = fam.describe();
        out["z"] = to_string(z);
        out["pass"] = rep.max_residual < thresh;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "relation residuals for " << fam.describe() << " at z = " << to_string(z)
                  << "\n";
        for (const auto& kv : rep.residuals)
            std::cout << "  " << kv.first << " = " << kv.second.str(3) << "\n";
        std::cout << "max = " << rep.max_residual.str(3) << (rep.max_residual < thresh ? "  (pass)" : "  (FAIL)")
                  << "\n";
    }
    return rep.max_residual < thresh ? 0 : kExitNumerical;
}

int run_mirror(const std::string& family, int order, const CommonOpts& c) {
    SeriesFamily fam = parse_family(family);
    MirrorMap mm = mirror_map(fam, order);
    std::optional<TUKSeries> tuk;
    if (fam.kind == FamilyKind::F54) tuk = t_u_k_series(fam, order);
    json out = mirror_json(mm, tuk);
    if (c.json_out) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "mirror map for " << fam.describe() << " (order " << order << ")\n";
        std::cout << "scale e^{nu0} = " << out["scale"].dump() << "\n";
        std::cout << "e^{H} in powers of z/scale: " << out["exp_h_scaled"].dump() << "\n";
        std::cout << "z(q)/scale coefficients:    " << out["z_of_q_over_scale"].dump() << "\n";
        if (tuk) {
            std::cout << "T coefficients: " << out["T"].dump() << "\n";
            std::cout << "U coefficients: " << out["U"].dump() << "\n";
            std::cout << "K coefficients: " << out["K"].dump() << "\n";
        }
    }
    return 0;
}

int run_solve(const std::string& family, const std::string& k_text, int u, const CommonOpts& c) {
    PrecisionContext ctx = make_context(c.bits);
    SeriesFamily fam = parse_family(family);
    Rational k = parse_rational(k_text);
    Integer bound = parse_bound(c.denominator_bound);
    RamanujanSolution sol;
    if (fam.kind == FamilyKind::F32) {
        sol = solve_3f2(fam.s, k, u == 0 ? 1 : u, ctx, bound);
    } else if (fam.kind == FamilyKind::F54) {
        sol = solve_5f4(fam.s, fam.t, k, u == 0 ? -1 : u, ctx, bound);
    } else {
        throw config_error("solve runs on 3F2 and 5F4 families");
    }
    std::cout << solution_json(sol, c.digits).dump(2) << "\n";
    return 0;
}

int run_theta(const std::string& q_text, const CommonOpts& c, const std::string& threshold) {
    PrecisionContext ctx = make_context(c.bits);
    Real q = Real::parse(q_text, ctx.internal_bits());
    ThetaValues th = theta(q, ctx);
    json out = theta_json(th, c.digits);
    Real worst = Real::of(0L, ctx.internal_bits());
    for (const auto& kv : out["identity_residuals"].items())
        worst = max(worst, Real::parse(kv.value().get<std::string>(), ctx.internal_bits()));
    Real thresh = Real::parse(threshold, ctx.internal_bits());
    out["pass"] = worst < thresh;
    if (c.json_out) std::cout << out.dump(2) << "\n";
    else {
        std::cout << "theta2 = " << th.theta2.str(c.digits) << "\ntheta3 = " << th.theta3.str(c.digits)
                  << "\ntheta4 = " << th.theta4.str(c.digits) << "\n";
        std::cout << "identity residuals: " << out["identity_residuals"].dump() << "\n";
    }
    return worst < thresh ? 0 : kExitNumerical;
}

int run_signature(const std::string& family, const std::string& z_text, int u,
                  const std::string& poly_text, const CommonOpts& c) {
    PrecisionContext ctx = make_context(c.bits);
    SeriesFamily fam = parse_family(family);
    Rational z = parse_rational(z_text);
    std::vector<Real> poly;
    std::string cur;
    for (char ch : poly_text + ",") {
        if (ch == ',') {
            if (!cur.empty()) poly.push_back(Real::of(parse_rational(cur), ctx.internal_bits()));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    ExpansionSignature sig = extract_signature(fam, Real::of(z, ctx.internal_bits()),
                                               u == 0 ? (z < 0 ? -1 : 1) : u, poly, ctx,
                                               parse_bound(c.denominator_bound));
    std::cout << signature_json(sig, c.digits).dump(2) << "\n";
    return 0;
}

int run_probe(const std::string& family, const std::string& klist, const CommonOpts& c) {
    PrecisionContext ctx = make_context(c.bits);
    SeriesFamily fam = parse_family(family);
    std::vector<Rational> ks;
    std::string cur;
    for (char ch : klist + ",") {
        if (ch == ',') {
            if (!cur.empty()) ks.push_back(parse_rational(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    ProbeReport rep = probe_conjectures(fam, ks, ctx, parse_bound(c.denominator_bound));
    std::cout << probe_json(rep).dump(2) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"high-precision toolkit for jet-form Ramanujan-type series"};
    app.require_subcommand(1);

    CommonOpts copt;
    std::string family, z_text, k_text = "1", q_text = "0.1", poly_text, klist;
    std::string threshold = "1e-60";
    int order = 8;
    int u = 0;

    auto* rel = app.add_subcommand("relations", "check the component relations at a point");
    rel->add_option("--family", family)->required();
    rel->add_option("--z", z_text)->required();
    rel->add_option("--threshold", threshold);
    add_common(rel, copt);

    auto* mir = app.add_subcommand("mirror", "print mirror map / T / U / K coefficients");
    mir->add_option("--family", family)->required();
    mir->add_option("--order", order);
    add_common(mir, copt);

    auto* sol = app.add_subcommand("solve", "solve a family at rational k");
    sol->add_option("--family", family)->required();
    sol->add_option("--k", k_text)->required();
    sol->add_option("--u", u)->check(CLI::IsMember({-1, 1}));
    add_common(sol, copt);

    auto* th = app.add_subcommand("theta", "Jacobi theta values and identity residuals");
    th->add_option("--q", q_text)->required();
    th->add_option("--threshold", threshold);
    add_common(th, copt);

    auto* sig = app.add_subcommand("signature", "extract (k, j, l) from series data");
    sig->add_option("--family", family)->required();
    sig->add_option("--z", z_text)->required();
    sig->add_option("--poly", poly_text, "comma-separated a,b[,c[,d]]")->required();
    sig->add_option("--u", u)->check(CLI::IsMember({-1, 1}));
    add_common(sig, copt);

    auto* pr = app.add_subcommand("probe", "run solve over a k grid, report recognitions");
    pr->add_option("--family", family)->required();
    pr->add_option("--k", klist, "comma-separated rational k values")->required();
    add_common(pr, copt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(rel)) return run_relations(family, z_text, copt, threshold);
        if (app.got_subcommand(mir)) return run_mirror(family, order, copt);
        if (app.got_subcommand(sol)) return run_solve(family, k_text, u, copt);
        if (app.got_subcommand(th)) return run_theta(q_text, copt, threshold);
        if (app.got_subcommand(sig)) return run_signature(family, z_text, u, poly_text, copt);
        if (app.got_subcommand(pr)) return run_probe(family, klist, copt);
    } catch (const no_solution_error& e) {
        std::cerr << "no solution in region: " << e.what() << "\n";
        return kExitNoSolution;
    } catch (const inconsistency_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const config_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const unsupported_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
