#include "qeuler/exactfield/format.hpp"

#include <cctype>
#include <map>
#include <vector>

namespace qeuler::field {

namespace {

template <typename Coeff>
std::string render_terms(const std::vector<Coeff>& coeffs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs[i] == 1;
    if (i == 0) {
      out += to_string(coeffs[i]);
      continue;
    }
    if (!unit) {
      out += to_string(coeffs[i]);
      out += '*';
    }
    out += 'q';
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::string_view text, const char* why) {
  throw ParseError(std::string("cannot parse '") + std::string(text) + "': " + why);
}

// Returns the index of the ')' matching the '(' at `open`.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  fail(s, "unbalanced parentheses");
}

void parse_term(std::string_view term, std::map<std::size_t, BigRational>& acc) {
  const std::string_view original = term;
  term = trim(term);
  if (term.empty()) fail(original, "empty term");
  const auto qpos = term.find('q');
  if (qpos == std::string_view::npos) {
    acc[0] += parse_rational(term);
    return;
  }
  BigRational coeff = 1;
  std::string_view head = trim(term.substr(0, qpos));
  if (!head.empty()) {
    if (head == "-") {
      coeff = -1;
    } else {
      if (head.back() != '*') fail(original, "expected '*' between coefficient and q");
      head.remove_suffix(1);
      coeff = parse_rational(head);
    }
  }
  std::string_view tail = trim(term.substr(qpos + 1));
  std::size_t power = 1;
  if (!tail.empty()) {
    if (tail.front() != '^') fail(original, "expected '^' after q");
    tail.remove_prefix(1);
    const BigInt k = parse_integer(tail);
    if (k < 0 || !k.fits_ulong_p()) fail(original, "exponent must be a non-negative integer");
    power = k.get_ui();
  }
  acc[power] += coeff;
}

}  // namespace

std::string to_string(const Polynomial& p) { return render_terms(p.coefficients()); }

std::string to_string(const RationalFunction& f) {
  const auto& den = f.denominator_coefficients();
  const std::string num = render_terms(f.numerator_coefficients());
  if (den.size() == 1 && den[0] == 1) return num;
  return "(" + num + ") / (" + render_terms(den) + ")";
}

Polynomial parse_polynomial(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(text, "empty input");
  std::map<std::size_t, BigRational> acc;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == '+') {
      parse_term(s.substr(start, i - start), acc);
      start = i + 1;
    }
  }
  std::vector<BigRational> coeffs;
  for (const auto& [power, c] : acc) {
    if (coeffs.size() <= power) coeffs.resize(power + 1, BigRational(0));
    coeffs[power] += c;
  }
  return Polynomial(std::move(coeffs));
}

RationalFunction parse_rational_function(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(text, "empty input");
  if (s.front() != '(') return RationalFunction(parse_polynomial(s));

  const std::size_t close = matching_paren(s, 0);
  const Polynomial num = parse_polynomial(s.substr(1, close - 1));
  std::string_view rest = trim(s.substr(close + 1));
  if (rest.empty()) return RationalFunction(num);
  if (rest.front() != '/') fail(text, "expected '/' after numerator");
  rest = trim(rest.substr(1));
  if (rest.empty() || rest.front() != '(') fail(text, "expected '(' before denominator");
  const std::size_t dclose = matching_paren(rest, 0);
  if (!trim(rest.substr(dclose + 1)).empty()) fail(text, "trailing characters");
  const Polynomial den = parse_polynomial(rest.substr(1, dclose - 1));
  if (den.is_zero()) throw DivisionByZero("parsed rational function has a zero denominator");
  return RationalFunction(num, den);
}

}  // namespace qeuler::field
