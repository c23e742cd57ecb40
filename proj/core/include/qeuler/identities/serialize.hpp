#pragma once

// JSON records for identity reports. One object per report:
//   {"identityId", "params", "holds", "asserted", "lhs", "rhs", "residual"[, "cross"]}
// Rational functions appear as their canonical strings.

#include "qeuler/identities/report.hpp"
#include "qeuler/identities/suite.hpp"

#include <nlohmann/json.hpp>

namespace qeuler::identities {

nlohmann::ordered_json to_json(const IdentityParams& params);
nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(const SkippedEntry& entry);

}  // namespace qeuler::identities
