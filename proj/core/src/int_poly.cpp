#include "qeuler/exactfield/detail/int_poly.hpp"

#include <algorithm>
#include <cstdlib>

namespace qeuler::field::detail {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      r[i] = a[i] + b[i];
    } else {
      r[i] = i < a.size() ? a[i] : b[i];
    }
  }
  trim(r);
  return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
  IntPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size() && i < b.size()) {
      r[i] = a[i] - b[i];
    } else if (i < a.size()) {
      r[i] = a[i];
    } else {
      r[i] = -b[i];
    }
  }
  trim(r);
  return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

IntPoly neg(IntPoly a) {
  for (auto& c : a) mpz_neg(c.get_mpz_t(), c.get_mpz_t());
  return a;
}

IntPoly scale(IntPoly a, const BigInt& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return a;
}

IntPoly shift(const IntPoly& a, long k) {
  if (a.empty()) return {};
  IntPoly r(static_cast<std::size_t>(k), BigInt(0));
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

IntPoly reverse(const IntPoly& a) {
  IntPoly r(a.rbegin(), a.rend());
  trim(r);
  return r;
}

IntPoly power(const IntPoly& a, unsigned long k) {
  IntPoly result{BigInt(1)};
  IntPoly base = a;
  while (k > 0) {
    if (k & 1UL) result = mul(result, base);
    k >>= 1;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

BigInt content(const IntPoly& a) {
  BigInt g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly divexact(IntPoly a, const BigInt& c) {
  if (c == 1) return a;
  for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return a;
}

IntPoly primitive_part(IntPoly a) {
  if (a.empty()) return a;
  BigInt c = content(a);
  if (leading(a) < 0) c = -c;
  return divexact(std::move(a), c);
}

BigInt evaluate(const IntPoly& a, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

BigRational evaluate(const IntPoly& a, const BigRational& x) {
  // Homogenised Horner: sum a_i num^i den^(d-i), divided by den^d at the end.
  if (a.empty()) return 0;
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = 0;
  BigInt den_power = 1;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc *= num;
    acc += *it * den_power;
    den_power *= den;
  }
  // den_power is den^(d+1) here; one factor too many.
  BigInt scale_den;
  mpz_pow_ui(scale_den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(degree(a)));
  return make_rational(acc, scale_den);
}

std::optional<IntPoly> exact_quotient(const IntPoly& f, const IntPoly& g) {
  if (g.empty()) throw DivisionByZero("polynomial division by zero");
  if (f.empty()) return IntPoly{};
  if (f.size() < g.size()) return std::nullopt;
  IntPoly rem = f;
  const std::size_t dg = g.size() - 1;
  IntPoly quot(f.size() - dg);
  const BigInt& lc = leading(g);
  BigInt r;
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + dg];
    if (top == 0) continue;
    mpz_tdiv_qr(quot[i].get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
    if (r != 0) return std::nullopt;
    for (std::size_t j = 0; j <= dg; ++j) {
      mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), g[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dg; ++i) {
    if (rem[i] != 0) return std::nullopt;
  }
  trim(quot);
  return quot;
}

namespace {

BigInt max_norm(const IntPoly& a) {
  BigInt m = 0;
  for (const auto& c : a) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

// Recovers the polynomial whose value at x is h, reading h in balanced base x.
IntPoly interpolate(BigInt h, const BigInt& x) {
  IntPoly out;
  BigInt half = x / 2;
  BigInt digit;
  while (h != 0) {
    mpz_fdiv_r(digit.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (digit > half) digit -= x;
    out.push_back(digit);
    h -= digit;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  trim(out);
  if (!out.empty() && leading(out) < 0) out = neg(std::move(out));
  return out;
}

// Both cofactor checks must succeed for h to be accepted.
bool divides_both(const IntPoly& h, const IntPoly& f, const IntPoly& g) {
  return exact_quotient(f, h).has_value() && exact_quotient(g, h).has_value();
}

constexpr int kHeuristicAttempts = 6;

}  // namespace

std::optional<IntPoly> gcd_heuristic(const IntPoly& f_in, const IntPoly& g_in) {
  if (f_in.empty() || g_in.empty()) return gcd_primitive_prs(f_in, g_in);
  const IntPoly f = primitive_part(f_in);
  const IntPoly g = primitive_part(g_in);
  if (degree(f) == 0 || degree(g) == 0) return IntPoly{BigInt(1)};

  const BigInt f_norm = max_norm(f);
  const BigInt g_norm = max_norm(g);
  const BigInt bound = 2 * std::min(f_norm, g_norm) + 29;
  BigInt x = std::max<BigInt>(std::min<BigInt>(bound, 99 * sqrt(bound)),
                              2 * std::min<BigInt>(f_norm / abs(leading(f)), g_norm / abs(leading(g))) + 2);

  for (int attempt = 0; attempt < kHeuristicAttempts; ++attempt) {
    const BigInt fx = evaluate(f, x);
    const BigInt gx = evaluate(g, x);
    if (fx != 0 && gx != 0) {
      BigInt hx;
      mpz_gcd(hx.get_mpz_t(), fx.get_mpz_t(), gx.get_mpz_t());

      IntPoly h = primitive_part(interpolate(hx, x));
      if (!h.empty() && divides_both(h, f, g)) return h;

      // Try recovering a cofactor instead; its quotient is the gcd candidate.
      for (const auto* pair : {&f, &g}) {
        const IntPoly& src = *pair;
        const BigInt srcx = pair == &f ? fx : gx;
        const IntPoly cof = interpolate(srcx / hx, x);
        if (cof.empty()) continue;
        auto cand = exact_quotient(src, cof);
        if (cand && !cand->empty()) {
          IntPoly hc = primitive_part(std::move(*cand));
          if (divides_both(hc, f, g)) return hc;
        }
      }
    }
    // x <- 73794 x sqrt(sqrt(x)) / 27011, the usual growth schedule.
    x = 73794 * x * sqrt(sqrt(x)) / 27011;
  }
  return std::nullopt;
}

IntPoly gcd_primitive_prs(const IntPoly& f_in, const IntPoly& g_in) {
  IntPoly a = primitive_part(f_in);
  IntPoly b = primitive_part(g_in);
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (degree(b) == 0) return IntPoly{BigInt(1)};
    // Pseudo-remainder of a by b.
    IntPoly r = a;
    const std::size_t db = b.size() - 1;
    const BigInt& lc = leading(b);
    while (!r.empty() && r.size() >= b.size()) {
      const std::size_t shift_by = r.size() - b.size();
      const BigInt top = leading(r);
      for (auto& c : r) c *= lc;
      for (std::size_t j = 0; j <= db; ++j) {
        mpz_submul(r[shift_by + j].get_mpz_t(), top.get_mpz_t(), b[j].get_mpz_t());
      }
      trim(r);
    }
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
  return primitive_part(std::move(a));
}

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  if (f.empty()) return primitive_part(g);
  if (g.empty()) return primitive_part(f);
  if (degree(f) == 0 || degree(g) == 0) return IntPoly{BigInt(1)};
  if (auto h = gcd_heuristic(f, g)) return *h;
  return gcd_primitive_prs(f, g);
}

}  // namespace qeuler::field::detail
