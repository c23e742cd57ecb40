#include "qeuler/qcore/euler.hpp"

#include "qeuler/errors.hpp"

#include <mutex>
#include <string>

namespace qeuler::qcore {

namespace {

void require_degree(long n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + ": n must be non-negative, got " + std::to_string(n));
}

// 1 + q^k as a rational function (k >= 0).
RationalFunction one_plus_q_power(long k) { return RationalFunction(1) + RationalFunction::q_power(k); }

}  // namespace

BigRational classical_euler(long n) {
  require_degree(n, "classical_euler");
  std::vector<BigRational> e{BigRational(1)};
  for (long m = 1; m <= n; ++m) {
    BigRational acc = 0;
    for (long l = 0; l < m; ++l) acc += BigRational(field::binomial(m, l)) * e[static_cast<std::size_t>(l)];
    e.push_back(-acc / 2);
  }
  return e.back();
}

QEulerTable::QEulerTable() : entries_{RationalFunction(1)} {}

RationalFunction QEulerTable::get(long n) {
  require_degree(n, "q_euler_number");
  const auto idx = static_cast<std::size_t>(n);
  {
    std::shared_lock lock(mutex_);
    if (idx < entries_.size()) return entries_[idx];
  }
  std::unique_lock lock(mutex_);
  while (entries_.size() <= idx) {
    const auto m = static_cast<long>(entries_.size());
    RationalFunction acc;
    for (long l = 0; l < m; ++l) {
      acc += RationalFunction(BigRational(field::binomial(m, l))) * RationalFunction::q_power(l + 1) *
             entries_[static_cast<std::size_t>(l)];
    }
    entries_.push_back(-acc / one_plus_q_power(m + 1));
  }
  return entries_[idx];
}

std::size_t QEulerTable::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

QEulerTable& shared_table() {
  static QEulerTable table;
  return table;
}

RationalFunction q_euler_number(long n, QEulerTable& table) { return table.get(n); }

RationalFunction q_euler_number_closed(long n) {
  require_degree(n, "q_euler_number_closed");
  RationalFunction sum;
  for (long l = 0; l <= n; ++l) {
    RationalFunction term = RationalFunction(BigRational(field::binomial(n, l))) / one_plus_q_power(l + 1);
    sum += (l % 2 == 0) ? term : -term;
  }
  const RationalFunction one_minus_q = RationalFunction(1) - RationalFunction::q();
  return q_number(2) * sum / pow(one_minus_q, n);
}

RationalFunction q_euler_polynomial(long n, long x, QEulerTable& table) {
  require_degree(n, "q_euler_polynomial");
  const RationalFunction bracket = q_number(x);
  RationalFunction sum;
  for (long l = 0; l <= n; ++l) {
    sum += RationalFunction(BigRational(field::binomial(n, l))) * pow(bracket, n - l) *
           RationalFunction::q_power(l * x) * table.get(l);
  }
  return sum;
}

}  // namespace qeuler::qcore
