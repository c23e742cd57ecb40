#pragma once

// Dense univariate polynomials over Z. These are the working representation
// behind RationalFunction; coefficient i multiplies q^i and the vector never
// carries a trailing zero (the zero polynomial is empty).

#include "qeuler/exactfield/big_rational.hpp"

#include <optional>
#include <vector>

namespace qeuler::field::detail {

using IntPoly = std::vector<BigInt>;

void trim(IntPoly& p);
inline long degree(const IntPoly& p) { return static_cast<long>(p.size()) - 1; }
inline const BigInt& leading(const IntPoly& p) { return p.back(); }

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly neg(IntPoly a);
IntPoly scale(IntPoly a, const BigInt& c);
IntPoly shift(const IntPoly& a, long k);  // a * q^k, k >= 0
IntPoly reverse(const IntPoly& a);        // q^deg(a) * a(1/q), zero-order terms dropped
IntPoly power(const IntPoly& a, unsigned long k);

/// Non-negative gcd of all coefficients; 0 for the zero polynomial.
BigInt content(const IntPoly& a);
/// Divides out the content and makes the leading coefficient positive.
IntPoly primitive_part(IntPoly a);
/// Exact division of every coefficient by c (c must divide each of them).
IntPoly divexact(IntPoly a, const BigInt& c);

BigInt evaluate(const IntPoly& a, const BigInt& x);
BigRational evaluate(const IntPoly& a, const BigRational& x);

/// Returns h with f = g * h over Z, or nullopt when g does not divide f.
std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g);

/// Primitive gcd with positive leading coefficient. gcd(0, 0) = 0, and
/// gcd(f, 0) = primitive_part(f). Tries the heuristic evaluation gcd first
/// and falls back to the primitive remainder sequence.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// The two algorithms behind gcd(); exposed for cross-checking in tests.
std::optional<IntPoly> gcd_heuristic(const IntPoly& f, const IntPoly& g);
IntPoly gcd_primitive_prs(const IntPoly& f, const IntPoly& g);

}  // namespace qeuler::field::detail
