#pragma once

// Canonical ASCII rendering of polynomials and rational functions.
//
//   polynomial  := "0" | term (" + " term)*        ascending powers
//   term        := coeff | "q" ["^" k] | coeff "*q" ["^" k]
//   coeff       := ["-"] digits ["/" digits]       omitted only when it is 1
//   rational fn := polynomial                      when the denominator is 1
//                | "(" polynomial ") / (" polynomial ")"
//
// e.g. "(-1*q) / (1 + q^2)". The output is a pure function of the canonical
// form, so equal values always render to identical bytes.

#include "qeuler/exactfield/polynomial.hpp"
#include "qeuler/exactfield/rational_function.hpp"

#include <string>
#include <string_view>

namespace qeuler::field {

std::string to_string(const Polynomial& p);
std::string to_string(const RationalFunction& f);

/// Parses the rendered form back. Whitespace around tokens is ignored and
/// non-canonical input (repeated powers, unreduced fractions) is accepted and
/// normalized. Throws ParseError on malformed text.
Polynomial parse_polynomial(std::string_view text);
RationalFunction parse_rational_function(std::string_view text);

}  // namespace qeuler::field
