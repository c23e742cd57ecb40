#include "qeuler/qcore/bernstein.hpp"

#include "qeuler/errors.hpp"
#include "qeuler/qcore/q_number.hpp"

#include <string>

namespace qeuler::qcore {

BernsteinIndex::BernsteinIndex(long k, long n) : k_(k), n_(n) {
  if (k < 0 || n < 0 || k > n) {
    throw PreconditionError("Bernstein index requires 0 <= k <= n, got k=" + std::to_string(k) +
                            ", n=" + std::to_string(n));
  }
}

RationalFunction bernstein(const BernsteinIndex& idx, long x) {
  const RationalFunction coeff(field::BigRational(field::binomial(idx.n(), idx.k())));
  return coeff * pow(q_number(x), idx.k()) * pow(q_number(1 - x, QBase::inverse_q), idx.n() - idx.k());
}

std::pair<RationalFunction, RationalFunction> reflect_power(long n, long x) {
  if (n < 0) throw PreconditionError("reflect_power: n must be non-negative");
  RationalFunction reflected = pow(q_number(1 - x, QBase::inverse_q), n);
  RationalFunction shifted = pow(-RationalFunction::q(), n) * pow(q_number(x - 1), n);
  return {std::move(reflected), std::move(shifted)};
}

}  // namespace qeuler::qcore
