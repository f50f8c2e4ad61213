#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "families.hpp"
#include "logchern.hpp"
#include "rootcover.hpp"

// JSON encoding of the library's structured inputs and outputs.
//
// Conventions (see docs/formats.md for the full schemas):
//   - Every integer and rational value is encoded as a decimal string
//     ("115132", "-3", "910786/311991") so arbitrary-precision values survive
//     the trip through JSON.  Parsers also accept plain JSON integers where a
//     number is expected; JSON floats are rejected because binary doubles
//     cannot hold exact rationals.
//   - Unknown object keys are rejected, so misspelled fields surface as input
//     errors instead of being silently ignored.
//   - pretty(parse_text(text)) reproduces a canonical document byte for byte,
//     and the *_from_json readers invert the corresponding to_json writers.
namespace geolab::jsonio {

using json = nlohmann::ordered_json;

// Parse JSON text; syntax errors become std::domain_error.
json parse_text(const std::string& text);

// Canonical serialization: two-space indentation plus a trailing newline.
std::string pretty(const json& doc);

json to_json(const logchern::ArrangementSummary& arr);
json to_json(const rootcover::BranchSummary& branch);
json to_json(const rootcover::SurfaceInvariants& inv);
json to_json(const rootcover::ConditionReport& report);
json to_json(const families::FamilyParams& params);
json to_json(const families::FamilyReport& report);
json to_json(const families::SlopeInversion& inversion);
json to_json(const families::TargetResult& result);
json to_json(const families::BaseChangeResult& result);

// {"checks": [{"name", "pass"}...], "all_pass": bool}
json checks_to_json(const std::vector<hesse::IdentityCheck>& checks, bool all_pass);

logchern::ArrangementSummary arrangement_from_json(const json& doc);
rootcover::BranchSummary branch_from_json(const json& doc);
rootcover::SurfaceInvariants invariants_from_json(const json& doc);

}  // namespace geolab::jsonio
