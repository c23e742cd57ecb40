#pragma once

// Fermionic p-adic q-integrals over Z_p, evaluated as exact truncated sums
//
//   S_N = 1/[p^N]_{-b} * sum_{x=0}^{p^N - 1} f(x) (-b)^x,
//   [p^N]_{-b} = (1 - (-b)^(p^N)) / (1 + b),
//
// at a rational specialization b of the measure parameter, together with
// closed forms of the integral for the integrand families used by the
// q-Euler/q-Bernstein identities.

#include "qeuler/errors.hpp"
#include "qeuler/exactfield/rational_function.hpp"
#include "qeuler/qcore/bernstein.hpp"
#include "qeuler/qcore/euler.hpp"

#include <compare>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qeuler::padic {

using field::BigInt;
using field::BigRational;
using field::RationalFunction;
using qcore::BernsteinIndex;

/// Parameter an integrand or measure is taken in: q itself or 1/q.
enum class Base { q, inverse_q };

/// x -> [x + shift]_base^n, or x -> [1 - x + shift]_base^n when reflected.
struct ShiftedPower {
  long shift = 0;
  long n = 0;
  Base base = Base::q;
  bool reflected = false;
};

/// x -> prod_i B_{k_i, n_i}(x, q). Must have at least one factor.
struct BernsteinProduct {
  std::vector<BernsteinIndex> factors;
};

struct IntegrandSpec {
  std::variant<ShiftedPower, BernsteinProduct> kind;
  Base measure = Base::q;

  /// [x]_q^n against mu_{-q}.
  static IntegrandSpec power(long n);
  /// Throws PreconditionError on a negative degree or an empty product.
  void validate() const;
};

/// Integrand/measure combination outside the families with a known closed form.
class UnsupportedSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// v_p of a rational: an integer, or +infinity for zero.
class Valuation {
 public:
  constexpr explicit Valuation(long value) : value_(value), infinite_(false) {}
  static constexpr Valuation infinity() {
    Valuation v(0);
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  /// Only meaningful when finite.
  constexpr long value() const { return value_; }

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

 private:
  long value_;
  bool infinite_;
};

/// "inf" or the decimal value.
std::string to_string(const Valuation& v);

bool is_prime(unsigned long n);

/// v_p(x) = v_p(numerator) - v_p(denominator); +infinity for x = 0.
Valuation padic_valuation(const BigRational& x, unsigned long p);

/// p, the rational specialization q0 and the truncation bound maxN.
/// Construction enforces: p an odd prime, v_p(q0) = 0, v_p(1 - q0) >= 1,
/// maxN >= 1 and p^maxN <= kMaxTerms.
class PadicContext {
 public:
  static constexpr unsigned long kMaxTerms = 10'000'000;

  PadicContext(unsigned long p, BigRational q0, int max_n);

  unsigned long p() const { return p_; }
  const BigRational& q0() const { return q0_; }
  int max_n() const { return max_n_; }

 private:
  unsigned long p_;
  BigRational q0_;
  int max_n_;
};

/// S_N for 1 <= N <= ctx.max_n(). Throws field::PoleError if a normalizer or
/// integrand denominator vanishes at q0.
BigRational truncated_integral(const IntegrandSpec& spec, const PadicContext& ctx, int n_level);

struct PadicProbe {
  IntegrandSpec spec;
  PadicContext context;
  std::vector<std::pair<int, BigRational>> partials;  // (N, S_N), N = 1..maxN
  RationalFunction exact;
  BigRational exact_value;                              // exact(q0)
  std::vector<std::pair<int, Valuation>> residual_valuations;  // (N, v_p(S_N - exact(q0)))

  bool non_decreasing() const;
};

/// Computes all partial sums in one pass and measures them against
/// exact(q0). Propagates field::PoleError if exact has a pole at q0.
PadicProbe probe_convergence(const IntegrandSpec& spec, const PadicContext& ctx, const RationalFunction& exact);

/// The exact value of the integral as an element of Q(q). Covered families:
///   - [x+a]_b^n against mu_{-b}          -> xi_{n,b}(a)
///   - [1-x+a]_{1/b}^n against mu_{-b}    -> sum_l C(n,l) (-1)^l xi_{l,b}(-a)
///   - [1-x+a]_b^n against mu_{-b}        -> [2]_b/(1-b)^n sum_j C(n,j) (-1)^j b^(j(1+a)) / (1 + b^(1-j))
///   - prod_i B_{k,n_i}(x,q) against mu_{-q}, common k
///       -> prod_i C(n_i,k) sum_{l=0}^{N-sk} C(N-sk,l) (-1)^l xi_{l+sk,q},  N = sum n_i
/// Anything else throws UnsupportedSpec.
RationalFunction closed_form_of(const IntegrandSpec& spec, qcore::QEulerTable& table = qcore::shared_table());

}  // namespace qeuler::padic
