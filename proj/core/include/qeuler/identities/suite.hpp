#pragma once

#include "qeuler/identities/checks.hpp"
#include "qeuler/identities/report.hpp"

#include <set>
#include <string>
#include <vector>

namespace qeuler::identities {

/// Parameter grids for run_suite.
struct SuiteConfig {
  long n_max = 8;
  long m_max = 8;
  long k_max = 4;
  long x_min = -2;
  long x_max = 3;
  long s_max = 3;
  /// The s-fold product identity (T9) draws every n_i from [0, part_max] and k from [0, t9_k_max].
  long part_max = 4;
  long t9_k_max = 2;
  /// Worker threads; 1 runs inline.
  unsigned threads = 1;
};

/// A grid point rejected by a check's precondition.
struct SkippedEntry {
  IdentityId id;
  IdentityParams params;
  std::string reason;
};

struct SuiteResult {
  std::vector<IdentityReport> reports;  // sorted by report_less
  std::vector<SkippedEntry> skipped;    // sorted by (id, params)

  /// True iff every asserted report holds.
  bool all_asserted_hold() const;
};

/// Runs the selected identities (all when `only` is empty) over the grid.
SuiteResult run_suite(const SuiteConfig& config, const std::set<IdentityId>& only = {},
                      QEulerTable& table = shared_table());

}  // namespace qeuler::identities
