#pragma once

// JSON and text renderings of verification reports and orbit tables.

#include <json.hpp>
#include <string>

#include "csplab/sieve.hpp"

namespace csplab {

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::json integer_to_json(const Integer& v);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CSPReport& r);
/// Inverse of report_to_json; throws PreconditionViolation on malformed input.
CSPReport report_from_json(const nlohmann::json& j);

std::string report_to_text(const CSPReport& r);

/// Orbit members as labels, with sizes, stabilizer orders and the folded
/// coefficients of f.
nlohmann::json orbit_table_json(const CSPInstance& inst);
std::string orbit_table_text(const CSPInstance& inst);

}  // namespace csplab
