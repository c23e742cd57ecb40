#include "qeuler/qcore/q_number.hpp"

namespace qeuler::qcore {

namespace {

RationalFunction q_number_in_q(long x) {
  if (x == 0) return RationalFunction();
  const auto m = static_cast<std::size_t>(x > 0 ? x : -x);
  // 1 + q + ... + q^(m-1); for negative x, [x]_q = -(1 + ... + q^(m-1)) / q^m.
  field::detail::IntPoly ones(m, BigInt(1));
  if (x > 0) return RationalFunction::from_coprime(std::move(ones), {BigInt(1)});
  field::detail::IntPoly den(m + 1, BigInt(0));
  den.back() = 1;
  return RationalFunction::from_coprime(field::detail::neg(std::move(ones)), std::move(den));
}

}  // namespace

RationalFunction q_number(long x, QBase base) {
  switch (base) {
    case QBase::q:
      return q_number_in_q(x);
    case QBase::inverse_q:
      return field::substitute_inverse(q_number_in_q(x));
    case QBase::negative_q: {
      const RationalFunction minus_q = -RationalFunction::q();
      return (RationalFunction(1) - pow(minus_q, x)) / (RationalFunction(1) + RationalFunction::q());
    }
  }
  return RationalFunction();
}

}  // namespace qeuler::qcore
