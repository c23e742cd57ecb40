#include "qeuler/exactfield/rational_function.hpp"

#include <utility>

namespace qeuler::field {

using detail::IntPoly;

namespace {

// Clears rational coefficients of num/den onto a common integer scale.
std::pair<IntPoly, IntPoly> to_int_polys(const Polynomial& num, const Polynomial& den) {
  BigInt lcm = 1;
  for (const auto* p : {&num, &den}) {
    for (const auto& c : p->coefficients()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  auto convert = [&lcm](const Polynomial& p) {
    IntPoly out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
      BigInt v = lcm / c.get_den();
      out.push_back(v * c.get_num());
    }
    return out;
  };
  return {convert(num), convert(den)};
}

Polynomial to_polynomial(const IntPoly& p) {
  std::vector<BigRational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return Polynomial(std::move(c));
}

const IntPoly kOne{BigInt(1)};

}  // namespace

RationalFunction::RationalFunction() : rep_(std::make_shared<const Rep>(Rep{{}, kOne})) {}

RationalFunction::RationalFunction(long constant)
    : RationalFunction(BigRational(constant)) {}

RationalFunction::RationalFunction(const BigRational& constant) {
  if (constant == 0) {
    rep_ = std::make_shared<const Rep>(Rep{{}, kOne});
  } else {
    rep_ = std::make_shared<const Rep>(Rep{{constant.get_num()}, {constant.get_den()}});
  }
}

RationalFunction::RationalFunction(const Polynomial& polynomial)
    : RationalFunction(polynomial, Polynomial(1)) {}

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  auto [n, d] = to_int_polys(num, den);
  rep_ = from_int_polys(std::move(n), std::move(d)).rep_;
}

RationalFunction RationalFunction::from_int_polys(IntPoly num, IntPoly den) {
  detail::trim(num);
  detail::trim(den);
  if (den.empty()) throw DivisionByZero("rational function with zero denominator");
  if (num.empty()) return RationalFunction();
  if (detail::degree(num) > 0 && detail::degree(den) > 0) {
    IntPoly g = detail::gcd(num, den);
    if (detail::degree(g) > 0) {
      num = *detail::exact_quotient(num, g);
      den = *detail::exact_quotient(den, g);
    }
  }
  return from_coprime(std::move(num), std::move(den));
}

RationalFunction RationalFunction::from_coprime(IntPoly num, IntPoly den) {
  if (num.empty()) return RationalFunction();
  BigInt c = detail::content(den);
  if (c != 1) {
    BigInt cn = detail::content(num);
    mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), cn.get_mpz_t());
  }
  if (detail::leading(den) < 0) c = -c;
  if (c != 1) {
    num = detail::divexact(std::move(num), c);
    den = detail::divexact(std::move(den), c);
  }
  return RationalFunction(std::make_shared<const Rep>(Rep{std::move(num), std::move(den)}));
}

RationalFunction RationalFunction::q() { return q_power(1); }

RationalFunction RationalFunction::q_power(long k) {
  IntPoly mono(static_cast<std::size_t>(k < 0 ? -k : k) + 1, BigInt(0));
  mono.back() = 1;
  if (k >= 0) return RationalFunction(std::make_shared<const Rep>(Rep{std::move(mono), kOne}));
  return RationalFunction(std::make_shared<const Rep>(Rep{kOne, std::move(mono)}));
}

Polynomial RationalFunction::numerator() const { return to_polynomial(rep_->num); }
Polynomial RationalFunction::denominator() const { return to_polynomial(rep_->den); }

namespace {

// a/b + c/d over coprime pairs. With g = gcd(b, d), the only common factors
// of the cross sum t = a*(d/g) + c*(b/g) and (b/g)*d are those of t and g.
RationalFunction add_fractions(const IntPoly& a, const IntPoly& b, const IntPoly& c, const IntPoly& d) {
  if (a.empty()) return RationalFunction::from_coprime(c, d);
  if (c.empty()) return RationalFunction::from_coprime(a, b);
  if (b == d) {
    return RationalFunction::from_int_polys(detail::add(a, c), b);
  }
  if (detail::degree(b) == 0 || detail::degree(d) == 0) {
    // Constant denominators are units in Q[q]: no polynomial gcd to find.
    IntPoly t = detail::add(detail::mul(a, d), detail::mul(c, b));
    IntPoly den = detail::mul(b, d);
    if (t.empty()) return RationalFunction();
    IntPoly g = detail::degree(b) == 0 ? detail::gcd(t, d) : detail::gcd(t, b);
    if (detail::degree(g) > 0) {
      t = *detail::exact_quotient(t, g);
      den = *detail::exact_quotient(den, g);
    }
    return RationalFunction::from_coprime(std::move(t), std::move(den));
  }
  IntPoly g = detail::gcd(b, d);
  IntPoly b1 = detail::degree(g) > 0 ? *detail::exact_quotient(b, g) : b;
  IntPoly d1 = detail::degree(g) > 0 ? *detail::exact_quotient(d, g) : d;
  IntPoly t = detail::add(detail::mul(a, d1), detail::mul(c, b1));
  if (t.empty()) return RationalFunction();
  IntPoly den = detail::mul(b1, d);
  if (detail::degree(g) > 0) {
    IntPoly h = detail::gcd(t, g);
    if (detail::degree(h) > 0) {
      t = *detail::exact_quotient(t, h);
      den = *detail::exact_quotient(den, h);
    }
  }
  return RationalFunction::from_coprime(std::move(t), std::move(den));
}

}  // namespace

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return add_fractions(a.rep_->num, a.rep_->den, b.rep_->num, b.rep_->den);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return add_fractions(a.rep_->num, a.rep_->den, detail::neg(b.rep_->num), b.rep_->den);
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(std::make_shared<const RationalFunction::Rep>(
      RationalFunction::Rep{detail::neg(a.rep_->num), a.rep_->den}));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  // Cancel crosswise: gcd(a.num, b.den) and gcd(b.num, a.den).
  auto cancel = [](const IntPoly& x, const IntPoly& y) -> std::pair<IntPoly, IntPoly> {
    if (detail::degree(x) <= 0 || detail::degree(y) <= 0) return {x, y};
    IntPoly g = detail::gcd(x, y);
    if (detail::degree(g) == 0) return {x, y};
    return {*detail::exact_quotient(x, g), *detail::exact_quotient(y, g)};
  };
  auto [an, bd] = cancel(a.rep_->num, b.rep_->den);
  auto [bn, ad] = cancel(b.rep_->num, a.rep_->den);
  return RationalFunction::from_coprime(detail::mul(an, bn), detail::mul(ad, bd));
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * inverse(b);
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  return a.rep_ == b.rep_ || (a.rep_->num == b.rep_->num && a.rep_->den == b.rep_->den);
}

RationalFunction inverse(const RationalFunction& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of the zero rational function");
  return RationalFunction::from_coprime(a.rep_->den, a.rep_->num);
}

RationalFunction pow(const RationalFunction& a, long k) {
  if (k < 0) return pow(inverse(a), -k);
  if (k == 0) return RationalFunction(1);
  if (k == 1 || a.is_zero()) return a;
  const auto e = static_cast<unsigned long>(k);
  // Powers of coprime polynomials stay coprime.
  return RationalFunction::from_coprime(detail::power(a.rep_->num, e), detail::power(a.rep_->den, e));
}

BigRational evaluate(const RationalFunction& f, const BigRational& q0) {
  const BigRational den = detail::evaluate(f.denominator_coefficients(), q0);
  if (den == 0) {
    throw PoleError("rational function has a pole at q = " + to_string(q0));
  }
  return detail::evaluate(f.numerator_coefficients(), q0) / den;
}

RationalFunction substitute_inverse(const RationalFunction& f) {
  if (f.is_zero()) return f;
  const IntPoly& num = f.rep_->num;
  const IntPoly& den = f.rep_->den;
  // P(1/q) = rev(P) / q^deg(P); the leftover power of q lands on one side.
  // rev(num) and rev(den) have non-zero constant terms, so no new common
  // factor appears and only content and sign need fixing.
  const long excess = detail::degree(den) - detail::degree(num);
  IntPoly rn = detail::reverse(num);
  IntPoly rd = detail::reverse(den);
  if (excess > 0) {
    rn = detail::shift(rn, excess);
  } else if (excess < 0) {
    rd = detail::shift(rd, -excess);
  }
  return RationalFunction::from_coprime(std::move(rn), std::move(rd));
}

}  // namespace qeuler::field
