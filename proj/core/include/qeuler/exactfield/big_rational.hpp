#pragma once

// Arbitrary-precision integer and rational scalars backed by GMP.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qeuler::field {

using BigInt = mpz_class;

/// Canonical rational: gcd(|num|, den) = 1, den >= 1, zero is 0/1.
/// mpq_class keeps that form after every arithmetic operation; values built
/// from raw parts must go through make_rational().
using BigRational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BigRational make_rational(const BigInt& num, const BigInt& den);

/// "a" for integers, "a/b" otherwise.
std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

/// Accepts "a", "-a", "a/b" (surrounding whitespace ignored).
BigInt parse_integer(std::string_view text);
BigRational parse_rational(std::string_view text);

/// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigRational pow(const BigRational& base, long exponent);

}  // namespace qeuler::field
