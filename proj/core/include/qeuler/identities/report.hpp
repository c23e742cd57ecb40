#pragma once

#include "qeuler/exactfield/rational_function.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qeuler::identities {

using field::RationalFunction;

/// One entry per numbered result (and per adjudicated printed variant).
enum class IdentityId {
  T1,
  P2,
  P3,
  C4,
  T5,
  T6,
  C7,
  T8,
  T9,
  E19,
  E18v20,
  E21v23,
  E8corrected,
  E8printed,
  T9printed,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::T1,     IdentityId::P2,          IdentityId::P3,        IdentityId::C4,
    IdentityId::T5,     IdentityId::T6,          IdentityId::C7,        IdentityId::T8,
    IdentityId::T9,     IdentityId::E19,         IdentityId::E18v20,    IdentityId::E21v23,
    IdentityId::E8corrected, IdentityId::E8printed, IdentityId::T9printed,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);

/// Printed variants are evaluated and recorded but never asserted.
bool is_asserted(IdentityId id);

/// Named integer parameters in a fixed order, plus the n-list of the s-fold
/// product identities and an optional branch tag ("moreover").
struct IdentityParams {
  std::vector<std::pair<std::string, long>> values;
  std::vector<long> parts;
  std::string branch;

  std::string to_string() const;
  friend auto operator<=>(const IdentityParams&, const IdentityParams&) = default;
};

struct IdentityReport {
  IdentityId id;
  IdentityParams params;
  RationalFunction lhs;
  RationalFunction rhs;
  RationalFunction residual;  // lhs - rhs
  /// A second, independent derivation of lhs (e.g. the closed-form integral).
  std::optional<RationalFunction> cross;
  /// residual == 0, and cross == lhs when a cross route is present.
  bool holds = false;
  bool asserted = true;
};

/// Builds a report from its two sides, computing residual and verdict.
IdentityReport make_report(IdentityId id, IdentityParams params, RationalFunction lhs, RationalFunction rhs,
                           std::optional<RationalFunction> cross = std::nullopt);

/// Ordering used for deterministic report lists: identity, then parameters.
bool report_less(const IdentityReport& a, const IdentityReport& b);

}  // namespace qeuler::identities
