#include "qeuler/padic/padic.hpp"

#include "qeuler/qcore/q_number.hpp"

#include <numeric>

namespace qeuler::padic {

IntegrandSpec IntegrandSpec::power(long n) { return IntegrandSpec{ShiftedPower{0, n, Base::q, false}, Base::q}; }

void IntegrandSpec::validate() const {
  if (const auto* sp = std::get_if<ShiftedPower>(&kind)) {
    if (sp->n < 0) throw PreconditionError("integrand power must be non-negative");
  } else if (std::get<BernsteinProduct>(kind).factors.empty()) {
    throw PreconditionError("Bernstein product needs at least one factor");
  }
}

std::string to_string(const Valuation& v) { return v.is_infinite() ? "inf" : std::to_string(v.value()); }

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Valuation padic_valuation(const BigRational& x, unsigned long p) {
  if (!is_prime(p)) throw PreconditionError("padic_valuation: p must be prime");
  if (x == 0) return Valuation::infinity();
  BigInt rest;
  const BigInt prime(p);
  const auto up = mpz_remove(rest.get_mpz_t(), x.get_num_mpz_t(), prime.get_mpz_t());
  const auto down = mpz_remove(rest.get_mpz_t(), x.get_den_mpz_t(), prime.get_mpz_t());
  return Valuation(static_cast<long>(up) - static_cast<long>(down));
}

PadicContext::PadicContext(unsigned long p, BigRational q0, int max_n) : p_(p), q0_(std::move(q0)), max_n_(max_n) {
  if (p == 2 || !is_prime(p)) {
    throw PreconditionError("p must be an odd prime, got " + std::to_string(p));
  }
  const Valuation vq = padic_valuation(q0_, p_);
  if (vq.is_infinite() || vq.value() != 0) {
    throw PreconditionError("q0 must be a p-adic unit (v_p(q0) = 0)");
  }
  if (padic_valuation(BigRational(1) - q0_, p_) < Valuation(1)) {
    throw PreconditionError("q0 must satisfy |1 - q0|_p < 1 (v_p(1 - q0) >= 1)");
  }
  if (max_n_ < 1) throw PreconditionError("maxN must be at least 1");
  unsigned long terms = 1;
  for (int i = 0; i < max_n_; ++i) {
    if (terms > kMaxTerms / p_) {
      throw PreconditionError("p^maxN exceeds the enumeration budget of " + std::to_string(kMaxTerms));
    }
    terms *= p_;
  }
}

namespace {

// Walks x = 0, 1, 2, ... producing f(x) at the specialized parameter with
// O(1) big-number updates per step.
class IntegrandWalker {
 public:
  IntegrandWalker(const IntegrandSpec& spec, const BigRational& q0) {
    if (const auto* sp = std::get_if<ShiftedPower>(&spec.kind)) {
      kind_ = Kind::shifted;
      exponent_ = static_cast<unsigned long>(sp->n);
      step_ = sp->base == Base::q ? q0 : 1 / q0;
      reflected_ = sp->reflected;
      // y starts at shift (forward) or 1 + shift (reflected).
      const long y0 = sp->reflected ? 1 + sp->shift : sp->shift;
      bracket_ = bracket_at(y0, step_);
    } else {
      const auto& factors = std::get<BernsteinProduct>(spec.kind).factors;
      kind_ = Kind::bernstein;
      step_ = q0;
      bracket_ = 0;
      coefficient_ = 1;
      for (const auto& f : factors) {
        coefficient_ *= field::binomial(f.n(), f.k());
        k_total_ += static_cast<unsigned long>(f.k());
        rest_total_ += static_cast<unsigned long>(f.n() - f.k());
      }
    }
  }

  BigRational value() const {
    if (kind_ == Kind::shifted) return power(bracket_, exponent_);
    return BigRational(coefficient_) * power(bracket_, k_total_) * power(1 - bracket_, rest_total_);
  }

  void advance() {
    if (kind_ == Kind::shifted && reflected_) {
      // [y-1]_b = ([y]_b - 1) / b
      bracket_ = (bracket_ - 1) / step_;
    } else {
      // [y+1]_b = 1 + b [y]_b
      bracket_ = 1 + step_ * bracket_;
    }
  }

 private:
  enum class Kind { shifted, bernstein };

  static BigRational power(const BigRational& base, unsigned long e) {
    if (e == 0) return 1;
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    BigRational r(num, den);  // already coprime
    return r;
  }

  // [y]_b at a rational b != 0, any integer y.
  static BigRational bracket_at(long y, const BigRational& b) {
    BigRational acc = 0;
    if (y >= 0) {
      for (long i = 0; i < y; ++i) acc = 1 + b * acc;
    } else {
      for (long i = 0; i > y; --i) acc = (acc - 1) / b;
    }
    return acc;
  }

  Kind kind_ = Kind::shifted;
  unsigned long exponent_ = 0;
  BigRational step_;
  bool reflected_ = false;
  BigRational bracket_;
  BigInt coefficient_ = 1;
  unsigned long k_total_ = 0;
  unsigned long rest_total_ = 0;
};

BigRational measure_parameter(const IntegrandSpec& spec, const BigRational& q0) {
  return spec.measure == Base::q ? q0 : 1 / q0;
}

BigRational normalizer(const BigRational& b, unsigned long terms) {
  // [M]_{-b} = (1 - (-b)^M) / (1 + b)
  if (b == -1) throw field::PoleError("measure normalizer has a pole at b = -1");
  const BigRational value = (1 - field::pow(-b, static_cast<long>(terms))) / (1 + b);
  if (value == 0) throw field::PoleError("measure normalizer vanishes");
  return value;
}

unsigned long ipow(unsigned long p, int n) {
  unsigned long r = 1;
  for (int i = 0; i < n; ++i) r *= p;
  return r;
}

void check_spec_at(const IntegrandSpec& spec, const BigRational& q0) {
  spec.validate();
  if (q0 == 0) throw field::PoleError("integrand has a pole at q0 = 0");
}

}  // namespace

BigRational truncated_integral(const IntegrandSpec& spec, const PadicContext& ctx, int n_level) {
  if (n_level < 1 || n_level > ctx.max_n()) {
    throw PreconditionError("truncation level must lie in [1, maxN]");
  }
  check_spec_at(spec, ctx.q0());
  const BigRational b = measure_parameter(spec, ctx.q0());
  const BigRational minus_b = -b;
  const unsigned long terms = ipow(ctx.p(), n_level);

  IntegrandWalker walker(spec, ctx.q0());
  BigRational weight = 1;
  BigRational sum = 0;
  for (unsigned long x = 0; x < terms; ++x) {
    sum += walker.value() * weight;
    walker.advance();
    weight *= minus_b;
  }
  return sum / normalizer(b, terms);
}

bool PadicProbe::non_decreasing() const {
  for (std::size_t i = 1; i < residual_valuations.size(); ++i) {
    if (residual_valuations[i].second < residual_valuations[i - 1].second) return false;
  }
  return true;
}

PadicProbe probe_convergence(const IntegrandSpec& spec, const PadicContext& ctx, const RationalFunction& exact) {
  check_spec_at(spec, ctx.q0());
  PadicProbe probe{spec, ctx, {}, exact, field::evaluate(exact, ctx.q0()), {}};

  const BigRational b = measure_parameter(spec, ctx.q0());
  const BigRational minus_b = -b;
  IntegrandWalker walker(spec, ctx.q0());
  BigRational weight = 1;
  BigRational sum = 0;
  unsigned long x = 0;
  for (int level = 1; level <= ctx.max_n(); ++level) {
    const unsigned long terms = ipow(ctx.p(), level);
    for (; x < terms; ++x) {
      sum += walker.value() * weight;
      walker.advance();
      weight *= minus_b;
    }
    BigRational s = sum / normalizer(b, terms);
    probe.residual_valuations.emplace_back(level, padic_valuation(s - probe.exact_value, ctx.p()));
    probe.partials.emplace_back(level, std::move(s));
  }
  return probe;
}

}  // namespace qeuler::padic
