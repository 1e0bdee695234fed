#include "ramajet/family.hpp"

#include <algorithm>

#include "ramajet/error.hpp"

namespace ramajet {

const std::vector<Rational>& admissible_f32_values() {
    static const std::vector<Rational> v = {
        make_rational(1, 2), make_rational(1, 3), make_rational(1, 4), make_rational(1, 6)};
    return v;
}

const std::vector<std::pair<Rational, Rational>>& admissible_f54_pairs() {
    static const std::vector<std::pair<Rational, Rational>> v = {
        {make_rational(1, 2), make_rational(1, 2)},  {make_rational(1, 2), make_rational(1, 3)},
        {make_rational(1, 2), make_rational(1, 4)},  {make_rational(1, 2), make_rational(1, 6)},
        {make_rational(1, 3), make_rational(1, 3)},  {make_rational(1, 3), make_rational(1, 4)},
        {make_rational(1, 3), make_rational(1, 6)},  {make_rational(1, 4), make_rational(1, 4)},
        {make_rational(1, 4), make_rational(1, 6)},  {make_rational(1, 6), make_rational(1, 6)},
        {make_rational(1, 5), make_rational(2, 5)},  {make_rational(1, 8), make_rational(3, 8)},
        {make_rational(1, 10), make_rational(3, 10)}, {make_rational(1, 12), make_rational(5, 12)}};
    return v;
}

SeriesFamily make_f32(const Rational& s) {
    const auto& adm = admissible_f32_values();
    if (std::find(adm.begin(), adm.end(), s) == adm.end())
        throw config_error("3F2 family requires s in {1/2, 1/3, 1/4, 1/6}");
    SeriesFamily f;
    f.kind = FamilyKind::F32;
    f.s = s;
    return f;
}

SeriesFamily make_f54(const Rational& s, const Rational& t) {
    const auto& adm = admissible_f54_pairs();
    bool ok = false;
    Rational a = s, b = t;
    for (const auto& p : adm) {
        if ((p.first == a && p.second == b) || (p.first == b && p.second == a)) {
            ok = true;
            a = p.first;
            b = p.second;
            break;
        }
    }
    if (!ok) throw config_error("(s,t) is not one of the fourteen admissible 5F4 pairs");
    SeriesFamily f;
    f.kind = FamilyKind::F54;
    f.s = a;
    f.t = b;
    return f;
}

SeriesFamily make_f76() {
    SeriesFamily f;
    f.kind = FamilyKind::F76;
    f.s = make_rational(1, 2);
    return f;
}

std::vector<Rational> SeriesFamily::upper_parameters() const {
    const Rational half = make_rational(1, 2);
    switch (kind) {
        case FamilyKind::F32: return {half, s, Rational(1) - s};
        case FamilyKind::F54: return {half, s, t, Rational(1) - t, Rational(1) - s};
        case FamilyKind::F76: return std::vector<Rational>(7, half);
    }
    throw error("unreachable");
}

std::string SeriesFamily::describe() const {
    switch (kind) {
        case FamilyKind::F32: return "3F2:" + to_string(s);
        case FamilyKind::F54: return "5F4:" + to_string(s) + "," + to_string(t);
        case FamilyKind::F76: return "7F6";
    }
    throw error("unreachable");
}

SeriesFamily parse_family(const std::string& text) {
    auto colon = text.find(':');
    std::string head = text.substr(0, colon == std::string::npos ? text.size() : colon);
    std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    if (head == "7F6") {
        if (!args.empty()) throw config_error("7F6 takes no parameters");
        return make_f76();
    }
    if (head == "3F2") {
        if (args.empty()) throw config_error("3F2 needs s, e.g. 3F2:1/2");
        return make_f32(parse_rational(args));
    }
    if (head == "5F4") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw config_error("5F4 needs s,t e.g. 5F4:1/2,1/3");
        return make_f54(parse_rational(args.substr(0, comma)), parse_rational(args.substr(comma + 1)));
    }
    throw config_error("unknown family kind: " + head);
}

namespace {
std::optional<Rational> f54_factor(const Rational& s) {
    if (s == make_rational(1, 2)) return Rational(32);
    if (s == make_rational(1, 3)) return Rational(54);
    if (s == make_rational(1, 4)) return Rational(128);
    if (s == make_rational(1, 6)) return Rational(864);
    return std::nullopt;
}
} // namespace

std::optional<Rational> rational_nu0_scale(const SeriesFamily& fam) {
    if (fam.kind == FamilyKind::F32) {
        if (fam.s == make_rational(1, 2)) return Rational(64);
        if (fam.s == make_rational(1, 3)) return Rational(108);
        if (fam.s == make_rational(1, 4)) return Rational(256);
        if (fam.s == make_rational(1, 6)) return Rational(1728);
        return std::nullopt;
    }
    if (fam.kind == FamilyKind::F54) {
        auto a = f54_factor(fam.s);
        auto b = f54_factor(fam.t);
        if (a && b) return *a * *b;
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace ramajet
