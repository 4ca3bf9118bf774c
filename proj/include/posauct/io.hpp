#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "posauct/equilibrium.hpp"
#include "posauct/mechanisms.hpp"
#include "posauct/model.hpp"

namespace posauct {

using json = nlohmann::json;

// Instance schema: {"ctrs":[...], "valuations":[...], "budgets":[...]}
// (n inferred). Canonical on-disk format for every CLI command.
json instance_to_json(const Instance& inst);
Instance instance_from_json(const json& j);  // ParseError / validation errors

// Scalar bids: {"bids":[...]} or a bare array.
// Matrix bids: {"bids":[[...],...]} or a bare array of arrays.
ScalarBidProfile scalar_profile_from_json(const json& j);
MatrixBidProfile matrix_profile_from_json(const json& j);
AnyProfile profile_from_json(MechanismId mech, const json& j);

// {"sigma":[...],"payments":[...],"utilities":[...]}; sigma 1-indexed,
// -infinity rendered as the string "-inf".
json outcome_to_json(const Outcome& out);

json deviation_to_json(const DeviationReport& d);
json equilibrium_report_to_json(const EquilibriumReport& rep);
json lpoa_report_to_json(const LpoaReport& rep);

json parse_json_file(const std::string& path);  // ParseError on failure
void write_json_file(const json& j, const std::string& path);

}  // namespace posauct
