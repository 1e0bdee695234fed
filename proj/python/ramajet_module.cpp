#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ramajet/constants.hpp"
#include "ramajet/json_io.hpp"

namespace py = pybind11;
using namespace ramajet;

namespace {

py::object json_to_py(const json& j) {
    switch (j.type()) {
        case json::value_t::null: return py::none();
        case json::value_t::boolean: return py::bool_(j.get<bool>());
        case json::value_t::number_integer: return py::int_(j.get<long long>());
        case json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
        case json::value_t::number_float: return py::float_(j.get<double>());
        case json::value_t::string: return py::str(j.get<std::string>());
        case json::value_t::array: {
            py::list out;
            for (const auto& e : j) out.append(json_to_py(e));
            return out;
        }
        case json::value_t::object: {
            py::dict out;
            for (const auto& kv : j.items()) out[py::str(kv.key())] = json_to_py(kv.value());
            return out;
        }
        default: return py::none();
    }
}

PrecisionContext ctx_of(int bits) { return make_context(bits); }

py::object py_solve(const std::string& family, const std::string& k, int u, int bits,
                    const std::string& denominator_bound, size_t digits) {
    SeriesFamily fam = parse_family(family);
    Integer bound;
    bound.set_str(denominator_bound, 10);
    PrecisionContext ctx = ctx_of(bits);
    RamanujanSolution sol;
    if (fam.kind == FamilyKind::F32)
        sol = solve_3f2(fam.s, parse_rational(k), u == 0 ? 1 : u, ctx, bound);
    else
        sol = solve_5f4(fam.s, fam.t, parse_rational(k), u == 0 ? -1 : u, ctx, bound);
    return json_to_py(solution_json(sol, digits));
}

py::object py_mirror(const std::string& family, int order) {
    SeriesFamily fam = parse_family(family);
    MirrorMap mm = mirror_map(fam, order);
    std::optional<TUKSeries> tuk;
    if (fam.kind == FamilyKind::F54) tuk = t_u_k_series(fam, order);
    return json_to_py(mirror_json(mm, tuk));
}

py::object py_relations(const std::string& family, const std::string& z, int bits) {
    SeriesFamily fam = parse_family(family);
    PrecisionContext ctx = ctx_of(bits);
    Rational zr = parse_rational(z);
    ComponentVector cv =
        evaluate_components(fam, Real::of(zr, ctx.internal_bits()), zr < 0 ? -1 : 1, ctx);
    return json_to_py(relation_json(relation_residuals(cv), 40));
}

py::object py_theta(const std::string& q, int bits) {
    PrecisionContext ctx = ctx_of(bits);
    return json_to_py(theta_json(theta(Real::parse(q, ctx.internal_bits()), ctx), 50));
}

py::object py_signature(const std::string& family, const std::string& z, int u,
                        const std::vector<std::string>& poly, int bits) {
    SeriesFamily fam = parse_family(family);
    PrecisionContext ctx = ctx_of(bits);
    Rational zr = parse_rational(z);
    std::vector<Real> p;
    for (const auto& s : poly) p.push_back(Real::of(parse_rational(s), ctx.internal_bits()));
    ExpansionSignature sig = extract_signature(fam, Real::of(zr, ctx.internal_bits()),
                                               u == 0 ? (zr < 0 ? -1 : 1) : u, p, ctx,
                                               Integer(1000000));
    return json_to_py(signature_json(sig, 50));
}

py::object py_probe(const std::string& family, const std::vector<std::string>& ks, int bits) {
    SeriesFamily fam = parse_family(family);
    PrecisionContext ctx = ctx_of(bits);
    std::vector<Rational> kk;
    for (const auto& s : ks) kk.push_back(parse_rational(s));
    return json_to_py(probe_json(probe_conjectures(fam, kk, ctx, Integer(1000000))));
}

std::string py_picard_fuchs(const std::string& family, int N) {
    return to_string(picard_fuchs_residual(parse_family(family), N));
}

py::dict py_constants(int bits) {
    PrecisionContext ctx = ctx_of(bits);
    FundamentalConstants fc = fundamental_constants(ctx);
    py::dict out;
    size_t digits = static_cast<size_t>(bits * 0.301) + 2;
    out["pi"] = fc.pi.str(digits);
    out["euler_gamma"] = fc.euler_gamma.str(digits);
    out["ln2"] = fc.ln2.str(digits);
    out["zeta3"] = fc.zeta3.str(digits);
    return out;
}

} // namespace

PYBIND11_MODULE(ramajet, m) {
    m.doc() = "high-precision jet arithmetic for Ramanujan-type series";
    m.def("solve", &py_solve, py::arg("family"), py::arg("k"), py::arg("u") = 0,
          py::arg("bits") = 256, py::arg("denominator_bound") = "1000000",
          py::arg("digits") = 50,
          "Solve a 3F2/5F4 family at rational k; returns the solution record.");
    m.def("mirror", &py_mirror, py::arg("family"), py::arg("order") = 8,
          "Mirror map (and T/U/K for 5F4) as exact rational coefficient lists.");
    m.def("relations", &py_relations, py::arg("family"), py::arg("z"), py::arg("bits") = 256,
          "Component relation residuals at a rational z.");
    m.def("theta", &py_theta, py::arg("q"), py::arg("bits") = 256,
          "Jacobi theta values and identity residuals at nome q.");
    m.def("signature", &py_signature, py::arg("family"), py::arg("z"), py::arg("u"),
          py::arg("poly"), py::arg("bits") = 256,
          "Extract the (k, j, l) expansion signature from series data.");
    m.def("probe", &py_probe, py::arg("family"), py::arg("ks"), py::arg("bits") = 256,
          "Solve over a k grid and report recognition outcomes.");
    m.def("picard_fuchs_residual", &py_picard_fuchs, py::arg("family"), py::arg("N") = 15,
          "Exact-rational recurrence residual (\"0\" when the recurrence holds).");
    m.def("constants", &py_constants, py::arg("bits") = 256,
          "pi, gamma, ln2, zeta(3) as decimal strings.");
}
