#pragma once

#include "qeuler/exactfield/big_rational.hpp"
#include "qeuler/exactfield/detail/int_poly.hpp"
#include "qeuler/exactfield/polynomial.hpp"

#include <memory>
#include <stdexcept>

namespace qeuler::field {

/// Raised when a rational function is evaluated at a root of its denominator.
class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An element of Q(q) held in canonical form:
///   - numerator and denominator are coprime integer polynomials,
///   - their coefficients have joint content 1,
///   - the denominator's leading coefficient is positive,
///   - zero is 0 / 1.
/// Two values are equal iff their canonical forms match structurally, so
/// operator== decides equality in the field.
///
/// Values are immutable and share their coefficient storage, so copies are
/// cheap and instances can be read from any number of threads.
class RationalFunction {
 public:
  RationalFunction();
  RationalFunction(long constant);  // NOLINT(google-explicit-constructor)
  RationalFunction(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Polynomial& polynomial);  // NOLINT(google-explicit-constructor)
  /// num / den, normalized. Throws DivisionByZero when den is zero.
  RationalFunction(const Polynomial& num, const Polynomial& den);

  /// Builds from integer polynomials; normalizes.
  static RationalFunction from_int_polys(detail::IntPoly num, detail::IntPoly den);
  /// Same, for callers that already know gcd(num, den) is a constant; only
  /// content and sign are fixed.
  static RationalFunction from_coprime(detail::IntPoly num, detail::IntPoly den);

  /// The indeterminate q.
  static RationalFunction q();
  /// q^k for any integer k.
  static RationalFunction q_power(long k);

  Polynomial numerator() const;
  Polynomial denominator() const;
  const detail::IntPoly& numerator_coefficients() const { return rep_->num; }
  const detail::IntPoly& denominator_coefficients() const { return rep_->den; }

  bool is_zero() const { return rep_->num.empty(); }
  bool is_polynomial() const { return rep_->den.size() == 1; }

  RationalFunction& operator+=(const RationalFunction& rhs) { return *this = *this + rhs; }
  RationalFunction& operator-=(const RationalFunction& rhs) { return *this = *this - rhs; }
  RationalFunction& operator*=(const RationalFunction& rhs) { return *this = *this * rhs; }
  RationalFunction& operator/=(const RationalFunction& rhs) { return *this = *this / rhs; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

 private:
  struct Rep {
    detail::IntPoly num;
    detail::IntPoly den;
  };

  explicit RationalFunction(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;

  friend RationalFunction inverse(const RationalFunction& a);
  friend RationalFunction pow(const RationalFunction& a, long k);
  friend RationalFunction substitute_inverse(const RationalFunction& f);
};

/// 1 / a. Throws DivisionByZero for a = 0.
RationalFunction inverse(const RationalFunction& a);

/// a^k; negative k requires a != 0.
RationalFunction pow(const RationalFunction& a, long k);

/// f(q0). Throws PoleError when the denominator vanishes at q0.
BigRational evaluate(const RationalFunction& f, const BigRational& q0);

/// g with g(q) = f(1/q).
RationalFunction substitute_inverse(const RationalFunction& f);

}  // namespace qeuler::field
