#include "qeuler/exactfield/big_rational.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace qeuler::field {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw DivisionByZero("rational with zero denominator");
  }
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

BigInt parse_integer(std::string_view text) {
  auto s = trim(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) {
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  for (std::size_t j = i; j < s.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
      throw ParseError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  // mpz_class rejects a leading '+'.
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

BigRational parse_rational(std::string_view text) {
  auto s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    return BigRational(parse_integer(s));
  }
  return make_rational(parse_integer(s.substr(0, slash)), parse_integer(s.substr(slash + 1)));
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Multiplicative formula; every partial product is itself a binomial, so
  // the division is exact.
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return result;
}

BigRational pow(const BigRational& base, long exponent) {
  BigInt num, den;
  const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  if (exponent < 0) {
    if (base == 0) throw DivisionByZero("negative power of zero");
    std::swap(num, den);
  }
  return make_rational(num, den);
}

}  // namespace qeuler::field
