#pragma once

// Classical Euler numbers and the q-Euler numbers/polynomials over Q(q).
//
// The q-Euler numbers are fixed by the umbral recurrence
//   xi_0 = 1,   q (q xi + 1)^n + xi_n = 0   (n > 0, xi^l -> xi_l),
// which solves to
//   (1 + q^(n+1)) xi_n = -sum_{l<n} C(n,l) q^(l+1) xi_l.
// Their closed (Witt) form under the measure mu_{-q} is
//   xi_n = [2]_q / (1-q)^n * sum_{l=0}^{n} C(n,l) (-1)^l / (1 + q^(l+1)).
// Both are provided so each can check the other.

#include "qeuler/exactfield/rational_function.hpp"
#include "qeuler/qcore/q_number.hpp"

#include <cstddef>
#include <shared_mutex>
#include <vector>

namespace qeuler::qcore {

/// E_n from 2 E_n = -sum_{l<n} C(n,l) E_l, E_0 = 1.
BigRational classical_euler(long n);

/// Grow-only memo of xi_{n,q}. Entries are filled lowest n first; readers
/// never observe a partially built entry. Safe to share between threads.
class QEulerTable {
 public:
  QEulerTable();

  RationalFunction get(long n);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<RationalFunction> entries_;
};

/// Process-wide table used when callers do not bring their own.
QEulerTable& shared_table();

/// xi_{n,q} via the recurrence, memoized in `table`.
RationalFunction q_euler_number(long n, QEulerTable& table = shared_table());

/// xi_{n,q} via the closed Witt form; independent of any table.
RationalFunction q_euler_number_closed(long n);

/// xi_{n,q}(x) = sum_{l=0}^{n} C(n,l) [x]_q^(n-l) q^(l x) xi_{l,q}, integer x.
RationalFunction q_euler_polynomial(long n, long x, QEulerTable& table = shared_table());

}  // namespace qeuler::qcore
