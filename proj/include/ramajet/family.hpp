#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramajet/rational.hpp"

namespace ramajet {

enum class FamilyKind { F32, F54, F76 };

// Which hypergeometric family a computation runs in. F32 takes one parameter
// s from {1/2, 1/3, 1/4, 1/6}; F54 takes an admissible pair (s, t) out of the
// fourteen; F76 is the single all-halves case.
struct SeriesFamily {
    FamilyKind kind = FamilyKind::F32;
    Rational s;
    Rational t; // F54 only

    int jet_order() const {
        switch (kind) {
            case FamilyKind::F32: return 3;
            case FamilyKind::F54: return 5;
            case FamilyKind::F76: return 7;
        }
        return 3;
    }

    // Numerator parameters of the Pochhammer product; the denominator is
    // (1)_n to the same power.
    std::vector<Rational> upper_parameters() const;

    std::string describe() const;
};

SeriesFamily make_f32(const Rational& s);
SeriesFamily make_f54(const Rational& s, const Rational& t);
SeriesFamily make_f76();

// "3F2:1/2", "5F4:1/2,1/3", "7F6"
SeriesFamily parse_family(const std::string& text);

const std::vector<Rational>& admissible_f32_values();
const std::vector<std::pair<Rational, Rational>>& admissible_f54_pairs();

// exp(nu0) when it is rational: 64/108/256/1728 for F32 (s = 1/2,1/3,1/4,1/6)
// and the product of per-parameter factors 32/54/128/864 for F54 pairs drawn
// from {1/2,1/3,1/4,1/6}; absent for the four exotic pairs.
std::optional<Rational> rational_nu0_scale(const SeriesFamily& fam);

} // namespace ramajet
