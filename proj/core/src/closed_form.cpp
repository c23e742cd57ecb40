#include "qeuler/padic/padic.hpp"

#include "qeuler/qcore/euler.hpp"

namespace qeuler::padic {

namespace {

RationalFunction binom(long n, long k) { return RationalFunction(BigRational(field::binomial(n, k))); }

RationalFunction in_base(const RationalFunction& f, Base base) {
  return base == Base::q ? f : field::substitute_inverse(f);
}

// sum_{l=0}^{len} C(len, l) (-1)^l xi_{l+offset,q}
RationalFunction alternating_moment_sum(long len, long offset, qcore::QEulerTable& table) {
  RationalFunction sum;
  for (long l = 0; l <= len; ++l) {
    const RationalFunction term = binom(len, l) * table.get(l + offset);
    sum += (l % 2 == 0) ? term : -term;
  }
  return sum;
}

RationalFunction shifted_power_closed_form(const ShiftedPower& sp, Base measure, qcore::QEulerTable& table) {
  if (!sp.reflected && sp.base == measure) {
    // Moment of [x+a]_b^n under mu_{-b}: the q-Euler polynomial at a.
    return in_base(qcore::q_euler_polynomial(sp.n, sp.shift, table), measure);
  }
  if (sp.reflected && sp.base != measure) {
    // [1-x+a]_{1/b} = 1 - [x-a]_b, then expand binomially.
    RationalFunction sum;
    for (long l = 0; l <= sp.n; ++l) {
      const RationalFunction term = binom(sp.n, l) * qcore::q_euler_polynomial(l, -sp.shift, table);
      sum += (l % 2 == 0) ? term : -term;
    }
    return in_base(sum, measure);
  }
  if (sp.reflected) {
    // [1-x+a]_b = (1 - b^(1+a) b^(-x)) / (1-b), and the measure sends b^(m x)
    // to [2]_b / (1 + b^(m+1)).
    const RationalFunction one(1);
    RationalFunction sum;
    for (long j = 0; j <= sp.n; ++j) {
      const RationalFunction term =
          binom(sp.n, j) * RationalFunction::q_power(j * (1 + sp.shift)) / (one + RationalFunction::q_power(1 - j));
      sum += (j % 2 == 0) ? term : -term;
    }
    const RationalFunction two = one + RationalFunction::q();
    return in_base(two * sum / pow(one - RationalFunction::q(), sp.n), measure);
  }
  throw UnsupportedSpec("shifted power must be taken in the measure parameter");
}

RationalFunction bernstein_closed_form(const BernsteinProduct& bp, Base measure, qcore::QEulerTable& table) {
  if (measure != Base::q) {
    throw UnsupportedSpec("Bernstein products are only covered against mu_{-q}");
  }
  const long k = bp.factors.front().k();
  long total = 0;
  RationalFunction prefactor(1);
  for (const auto& f : bp.factors) {
    if (f.k() != k) throw UnsupportedSpec("Bernstein factors must share the same k");
    total += f.n();
    prefactor *= binom(f.n(), f.k());
  }
  const long s = static_cast<long>(bp.factors.size());
  // prod_i [x]^k [1-x]_{1/q}^(n_i-k) = [x]^(sk) (1 - [x])^(N - sk)
  return prefactor * alternating_moment_sum(total - s * k, s * k, table);
}

}  // namespace

RationalFunction closed_form_of(const IntegrandSpec& spec, qcore::QEulerTable& table) {
  spec.validate();
  if (const auto* sp = std::get_if<ShiftedPower>(&spec.kind)) {
    return shifted_power_closed_form(*sp, spec.measure, table);
  }
  return bernstein_closed_form(std::get<BernsteinProduct>(spec.kind), spec.measure, table);
}

}  // namespace qeuler::padic
