#pragma once

#include <json.hpp>

#include "ramajet/expansions.hpp"
#include "ramajet/modular.hpp"
#include "ramajet/qexpansion.hpp"
#include "ramajet/solver.hpp"

namespace ramajet {

using nlohmann::json;

// Exact values serialize as a rational string "p/q" or a tagged quadratic
// {"sqrt": "r"} / {"p":, "q":, "d":}; unrecognized values as
// {"decimal": "...", "digits": n}.
json value_json(const Real& v, const RecognizedConstant& rec, size_t digits);
json decimal_json(const Real& v, size_t digits);

json solution_json(const RamanujanSolution& sol, size_t digits);
json relation_json(const RelationReport& rep, size_t digits);
json mirror_json(const MirrorMap& mm, const std::optional<TUKSeries>& tuk);
json signature_json(const ExpansionSignature& sig, size_t digits);
json theta_json(const ThetaValues& th, size_t digits);
json probe_json(const ProbeReport& rep);

} // namespace ramajet
