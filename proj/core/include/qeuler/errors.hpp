#pragma once

#include <stdexcept>

namespace qeuler {

/// A documented precondition on the arguments of an operation was violated
/// (negative degree, k > n, an identity's parameter range, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qeuler
