#pragma once

// JSON forms of the reports. Polynomials are stored as canonical strings.

#include <json.hpp>

#include "rrw/combinatorics.hpp"
#include "rrw/discovery.hpp"
#include "rrw/identities.hpp"

namespace rrw {

/// {id, params, order, status: "pass"|"fail", discrepancy?: {degree, lhs, rhs}}
void to_json(nlohmann::json& j, const VerificationReport& r);
/// Inverse of to_json; throws ParseError on schema violations.
void from_json(const nlohmann::json& j, VerificationReport& r);

void to_json(nlohmann::json& j, const RefinementReport& r);
void to_json(nlohmann::json& j, const TableRow& r);
void to_json(nlohmann::json& j, const DiscoveryReport& r);

}  // namespace rrw
