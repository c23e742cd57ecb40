#include "qeuler/identities/serialize.hpp"

#include "qeuler/exactfield/format.hpp"

namespace qeuler::identities {

nlohmann::ordered_json to_json(const IdentityParams& params) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : params.values) j[name] = value;
  if (!params.parts.empty()) j["parts"] = params.parts;
  if (!params.branch.empty()) j["branch"] = params.branch;
  return j;
}

nlohmann::ordered_json to_json(const IdentityReport& report) {
  nlohmann::ordered_json j;
  j["identityId"] = std::string(to_string(report.id));
  j["params"] = to_json(report.params);
  j["holds"] = report.holds;
  j["asserted"] = report.asserted;
  j["lhs"] = field::to_string(report.lhs);
  j["rhs"] = field::to_string(report.rhs);
  j["residual"] = field::to_string(report.residual);
  if (report.cross) j["cross"] = field::to_string(*report.cross);
  return j;
}

nlohmann::ordered_json to_json(const SkippedEntry& entry) {
  nlohmann::ordered_json j;
  j["identityId"] = std::string(to_string(entry.id));
  j["params"] = to_json(entry.params);
  j["reason"] = entry.reason;
  return j;
}

}  // namespace qeuler::identities
