#pragma once

#include "qeuler/exactfield/big_rational.hpp"

#include <cstddef>
#include <vector>

namespace qeuler::field {

/// Dense polynomial in q with rational coefficients, ascending powers.
/// Never stores a trailing zero; the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  Polynomial(BigRational constant);  // NOLINT(google-explicit-constructor)

  static Polynomial monomial(BigRational coefficient, std::size_t power);
  /// The indeterminate q.
  static Polynomial q();

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  BigRational coefficient(std::size_t power) const;

  BigRational evaluate(const BigRational& at) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();

  std::vector<BigRational> coeffs_;
};

}  // namespace qeuler::field
