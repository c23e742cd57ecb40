#pragma once

#include "qeuler/exactfield/rational_function.hpp"

#include <utility>

namespace qeuler::qcore {

using field::RationalFunction;

/// (k, n) of B_{k,n}; construction enforces 0 <= k <= n.
class BernsteinIndex {
 public:
  BernsteinIndex(long k, long n);

  long k() const { return k_; }
  long n() const { return n_; }

  friend bool operator==(const BernsteinIndex&, const BernsteinIndex&) = default;

 private:
  long k_;
  long n_;
};

/// B_{k,n}(x, q) = C(n,k) [x]_q^k [1-x]_{1/q}^(n-k) at integer x.
RationalFunction bernstein(const BernsteinIndex& idx, long x);

/// ([1-x]_{1/q}^n, (-1)^n q^n [x-1]_q^n). The two are equal for every n, x.
std::pair<RationalFunction, RationalFunction> reflect_power(long n, long x);

}  // namespace qeuler::qcore
