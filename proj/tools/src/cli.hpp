#pragma once

// qeuler command-line front end.
//
//   qeuler compute <kind> [--n N] [--k K] [--x X] [--at Q0] [integrand flags]
//   qeuler verify [--id ID|all] [grid flags]
//   qeuler convergence --p P --q Q0 --max-N N [integrand flags] [--csv]
//   qeuler table --n A..B [--q Q0] [--csv]
//
// Every invocation prints one JSON record
//   {"command", "params", "result", "artifactVersion"}
// (or CSV for tables with --csv). Exit codes: 0 success, 1 an asserted
// identity failed (or a convergence probe decreased), 2 usage error,
// 3 unsupported integrand.

#include <ostream>
#include <string>
#include <vector>

namespace qeuler::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertionFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitUnsupported = 3;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qeuler::cli
