#include "qeuler/identities/checks.hpp"

#include "qeuler/errors.hpp"
#include "qeuler/padic/padic.hpp"
#include "qeuler/qcore/bernstein.hpp"
#include "qeuler/qcore/q_number.hpp"

#include <array>
#include <numeric>
#include <string>
#include <tuple>

namespace qeuler::identities {

using field::BigRational;
using field::substitute_inverse;

namespace {

constexpr std::array<std::string_view, 15> kNames = {
    "T1", "P2", "P3", "C4", "T5", "T6", "C7", "T8", "T9", "E19", "E18v20", "E21v23", "E8corrected", "E8printed",
    "T9printed",
};

}  // namespace

std::string_view to_string(IdentityId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<IdentityId> parse_identity_id(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<IdentityId>(i);
  }
  return std::nullopt;
}

bool is_asserted(IdentityId id) { return id != IdentityId::E8printed && id != IdentityId::T9printed; }

std::string IdentityParams::to_string() const {
  std::string out;
  auto append = [&out](const std::string& piece) {
    if (!out.empty()) out += ',';
    out += piece;
  };
  for (const auto& [name, value] : values) append(name + "=" + std::to_string(value));
  if (!parts.empty()) {
    std::string list = "parts=(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) list += ' ';
      list += std::to_string(parts[i]);
    }
    append(list + ")");
  }
  if (!branch.empty()) append("branch=" + branch);
  return out;
}

IdentityReport make_report(IdentityId id, IdentityParams params, RationalFunction lhs, RationalFunction rhs,
                           std::optional<RationalFunction> cross) {
  IdentityReport r{id, std::move(params), std::move(lhs), std::move(rhs), {}, std::move(cross), false, is_asserted(id)};
  r.residual = r.lhs - r.rhs;
  r.holds = r.residual.is_zero() && (!r.cross || *r.cross == r.lhs);
  return r;
}

bool report_less(const IdentityReport& a, const IdentityReport& b) {
  return std::tie(a.id, a.params) < std::tie(b.id, b.params);
}

namespace {

RationalFunction binom(long n, long k) { return RationalFunction(BigRational(field::binomial(n, k))); }
RationalFunction signed_term(const RationalFunction& t, long exponent) { return exponent % 2 == 0 ? t : -t; }
RationalFunction q_pow(long k) { return RationalFunction::q_power(k); }
RationalFunction two_q() { return qcore::q_number(2); }

void require(bool ok, const std::string& message) {
  if (!ok) throw PreconditionError(message);
}

IdentityParams params(std::initializer_list<std::pair<std::string, long>> values, std::string branch = {}) {
  return IdentityParams{{values.begin(), values.end()}, {}, std::move(branch)};
}

// xi_{n,1/q}
RationalFunction xi_inv(long n, QEulerTable& table) { return substitute_inverse(table.get(n)); }

// sum_{l=0}^{len} C(len,l) (-1)^l xi_{l+offset,q}
RationalFunction moment_side(long len, long offset, QEulerTable& table) {
  RationalFunction sum;
  for (long l = 0; l <= len; ++l) sum += signed_term(binom(len, l) * table.get(l + offset), l);
  return sum;
}

// q^2 sum_{l=0}^{width} C(width,l) (-1)^(width-l) xi_{top-l,1/q}
RationalFunction reflected_side(long width, long top, QEulerTable& table) {
  RationalFunction sum;
  for (long l = 0; l <= width; ++l) sum += signed_term(binom(width, l) * xi_inv(top - l, table), width - l);
  return q_pow(2) * sum;
}

// xi_{j,1/q}(2)
RationalFunction xi_inv_at_two(long j, QEulerTable& table) {
  return substitute_inverse(qcore::q_euler_polynomial(j, 2, table));
}

// sum_{l=0}^{width} C(width,l) (-1)^(width+l) xi_{top-l,1/q}(2)
RationalFunction reflected_side_at_two(long width, long top, QEulerTable& table) {
  RationalFunction sum;
  for (long l = 0; l <= width; ++l) sum += signed_term(binom(width, l) * xi_inv_at_two(top - l, table), width + l);
  return sum;
}

padic::IntegrandSpec bernstein_spec(const std::vector<long>& ns, long k) {
  padic::BernsteinProduct bp;
  for (long n : ns) bp.factors.emplace_back(k, n);
  return padic::IntegrandSpec{std::move(bp), padic::Base::q};
}

RationalFunction bernstein_prefactor(const std::vector<long>& ns, long k) {
  RationalFunction p(1);
  for (long n : ns) p *= binom(n, k);
  return p;
}

}  // namespace

IdentityReport check_theorem1(long n, QEulerTable& table) {
  require(n >= 1, "T1 requires n >= 1");
  RationalFunction lhs = qcore::q_euler_polynomial(n, 2, table);
  RationalFunction rhs = RationalFunction(1) + q_pow(-1) + q_pow(-2) * table.get(n);
  return make_report(IdentityId::T1, params({{"n", n}}), std::move(lhs), std::move(rhs));
}

IdentityReport check_prop2(long n, QEulerTable& table) {
  require(n >= 0, "P2 requires n >= 0");
  RationalFunction lhs = moment_side(n, 0, table);
  RationalFunction rhs = pow(-RationalFunction::q(), n) * qcore::q_euler_polynomial(n, -1, table);
  const padic::IntegrandSpec spec{padic::ShiftedPower{0, n, padic::Base::inverse_q, true}, padic::Base::q};
  return make_report(IdentityId::P2, params({{"n", n}}), std::move(lhs), std::move(rhs),
                     padic::closed_form_of(spec, table));
}

IdentityReport check_prop3(long n, long x, QEulerTable& table) {
  require(n >= 0, "P3 requires n >= 0");
  // (-1)^n q^n [2]_q / (1-q)^n sum_l C(n,l) (-1)^l q^(l x) / (1 + q^(l+1))
  RationalFunction sum;
  for (long l = 0; l <= n; ++l) {
    sum += signed_term(binom(n, l) * q_pow(l * x) / (RationalFunction(1) + q_pow(l + 1)), l);
  }
  const RationalFunction one_minus_q = RationalFunction(1) - RationalFunction::q();
  RationalFunction lhs = pow(-RationalFunction::q(), n) * two_q() * sum / pow(one_minus_q, n);
  RationalFunction rhs = pow(-RationalFunction::q(), n) * qcore::q_euler_polynomial(n, x, table);
  // [1-x+x1]_{1/q}^n is the shifted power [x1 + (1-x)]_{1/q}^n in the integration variable x1.
  const padic::IntegrandSpec spec{padic::ShiftedPower{1 - x, n, padic::Base::inverse_q, false},
                                  padic::Base::inverse_q};
  return make_report(IdentityId::P3, params({{"n", n}, {"x", x}}), std::move(lhs), std::move(rhs),
                     padic::closed_form_of(spec, table));
}

IdentityReport check_cor4(long n, QEulerTable& table) {
  require(n >= 0, "C4 requires n >= 0");
  RationalFunction lhs = xi_inv_at_two(n, table);
  RationalFunction rhs = pow(-RationalFunction::q(), n) * qcore::q_euler_polynomial(n, -1, table);
  return make_report(IdentityId::C4, params({{"n", n}}), std::move(lhs), std::move(rhs));
}

IdentityReport check_theorem5(long n, QEulerTable& table) {
  require(n >= 1, "T5 requires n >= 1");
  const padic::IntegrandSpec reflected{padic::ShiftedPower{0, n, padic::Base::inverse_q, true}, padic::Base::q};
  RationalFunction lhs = padic::closed_form_of(reflected, table);
  RationalFunction rhs = two_q() + q_pow(2) * xi_inv(n, table);
  // Middle member: q^2 * integral of [x]_{1/q}^n against mu_{-1/q} + q + 1.
  const padic::IntegrandSpec inverse_moment{padic::ShiftedPower{0, n, padic::Base::inverse_q, false},
                                            padic::Base::inverse_q};
  RationalFunction middle = q_pow(2) * padic::closed_form_of(inverse_moment, table) + two_q();
  return make_report(IdentityId::T5, params({{"n", n}}), std::move(lhs), std::move(rhs), std::move(middle));
}

IdentityReport check_theorem6(long n, long k, QEulerTable& table) {
  require(k >= 0 && n >= k, "T6 requires n >= k >= 0");
  RationalFunction lhs = moment_side(n - k, k, table);
  RationalFunction rhs = reflected_side_at_two(k, n, table);
  RationalFunction cross = padic::closed_form_of(bernstein_spec({n}, k), table) / binom(n, k);
  return make_report(IdentityId::T6, params({{"n", n}, {"k", k}}), std::move(lhs), std::move(rhs), std::move(cross));
}

IdentityReport check_cor7(long n, long k, QEulerTable& table) {
  require(k > 0 && n > k, "C7 requires n > k > 0");
  RationalFunction lhs = moment_side(n - k, k, table);
  RationalFunction rhs = reflected_side(k, n, table);
  return make_report(IdentityId::C7, params({{"n", n}, {"k", k}}), std::move(lhs), std::move(rhs));
}

IdentityReport check_cor7_moreover(long n, QEulerTable& table) {
  require(n >= 1, "C7 (moreover) requires n >= 1");
  RationalFunction lhs = moment_side(n, 0, table);
  RationalFunction rhs = two_q() + q_pow(2) * xi_inv(n, table);
  return make_report(IdentityId::C7, params({{"n", n}}, "moreover"), std::move(lhs), std::move(rhs));
}

IdentityReport check_theorem8(long m, long n, long k, QEulerTable& table) {
  require(m >= 0 && n >= 0 && k >= 0 && m + n > 2 * k, "T8 requires m, n, k >= 0 and m + n > 2k");
  if (k == 0) {
    RationalFunction lhs = moment_side(m + n, 0, table);
    RationalFunction rhs = q_pow(2) * xi_inv(n + m, table) + two_q();
    return make_report(IdentityId::T8, params({{"m", m}, {"n", n}, {"k", k}}, "moreover"), std::move(lhs),
                       std::move(rhs));
  }
  RationalFunction lhs = moment_side(m + n - 2 * k, 2 * k, table);
  RationalFunction rhs = reflected_side(2 * k, n + m, table);
  return make_report(IdentityId::T8, params({{"m", m}, {"n", n}, {"k", k}}), std::move(lhs), std::move(rhs));
}

namespace {

IdentityParams parts_params(const std::vector<long>& parts, long k, std::string branch = {}) {
  IdentityParams p{{{"s", static_cast<long>(parts.size())}, {"k", k}}, parts, std::move(branch)};
  return p;
}

}  // namespace

IdentityReport check_theorem9(const std::vector<long>& parts, long k, QEulerTable& table) {
  const long s = static_cast<long>(parts.size());
  require(s >= 1, "T9 requires at least one factor");
  require(k >= 0, "T9 requires k >= 0");
  for (long ni : parts) require(ni >= 0, "T9 requires every n_i >= 0");
  const long total = std::accumulate(parts.begin(), parts.end(), 0L);
  require(total > s * k, "T9 requires n_1 + ... + n_s > s k");

  std::optional<RationalFunction> cross;
  const bool valid_bernstein = std::all_of(parts.begin(), parts.end(), [k](long ni) { return ni >= k; });
  if (valid_bernstein) {
    cross = padic::closed_form_of(bernstein_spec(parts, k), table) / bernstein_prefactor(parts, k);
  }
  if (k == 0) {
    RationalFunction lhs = moment_side(total, 0, table);
    RationalFunction rhs = two_q() + q_pow(2) * xi_inv(total, table);
    return make_report(IdentityId::T9, parts_params(parts, k, "moreover"), std::move(lhs), std::move(rhs),
                       std::move(cross));
  }
  RationalFunction lhs = moment_side(total - s * k, s * k, table);
  RationalFunction rhs = reflected_side(s * k, total, table);
  return make_report(IdentityId::T9, parts_params(parts, k), std::move(lhs), std::move(rhs), std::move(cross));
}

IdentityReport check_theorem9_printed(const std::vector<long>& parts, QEulerTable& table) {
  require(!parts.empty(), "T9 requires at least one factor");
  for (long ni : parts) require(ni >= 0, "T9 requires every n_i >= 0");
  const long total = std::accumulate(parts.begin(), parts.end(), 0L);
  require(total > 0, "T9 (k = 0) requires n_1 + ... + n_s > 0");
  RationalFunction lhs = moment_side(total, 0, table);
  RationalFunction rhs = two_q() + xi_inv(total, table);
  return make_report(IdentityId::T9printed, parts_params(parts, 0, "moreover"), std::move(lhs), std::move(rhs));
}

IdentityReport check_eq19(long n, long k, long x) {
  require(k >= 0 && k <= n, "E19 requires 0 <= k <= n");
  RationalFunction lhs = qcore::bernstein(qcore::BernsteinIndex(k, n), x);
  RationalFunction rhs = substitute_inverse(qcore::bernstein(qcore::BernsteinIndex(n - k, n), 1 - x));
  return make_report(IdentityId::E19, params({{"n", n}, {"k", k}, {"x", x}}), std::move(lhs), std::move(rhs));
}

IdentityReport check_eq18_vs_20(long n, long k, QEulerTable& table) {
  require(k >= 0 && k <= n, "E18v20 requires 0 <= k <= n");
  RationalFunction lhs = padic::closed_form_of(bernstein_spec({n}, k), table) / binom(n, k);
  RationalFunction rhs;
  for (long l = 0; l <= k; ++l) {
    const padic::IntegrandSpec reflected{padic::ShiftedPower{0, n - l, padic::Base::inverse_q, true},
                                         padic::Base::q};
    rhs += signed_term(binom(k, l) * padic::closed_form_of(reflected, table), k + l);
  }
  return make_report(IdentityId::E18v20, params({{"n", n}, {"k", k}}), std::move(lhs), std::move(rhs));
}

IdentityReport check_eq21_vs_23(long m, long n, long k, QEulerTable& table) {
  require(k >= 0 && k <= m && k <= n, "E21v23 requires 0 <= k <= min(m, n)");
  RationalFunction lhs = reflected_side_at_two(2 * k, n + m, table);
  RationalFunction rhs = moment_side(n + m - 2 * k, 2 * k, table);
  RationalFunction cross = padic::closed_form_of(bernstein_spec({n, m}, k), table) / bernstein_prefactor({n, m}, k);
  return make_report(IdentityId::E21v23, params({{"m", m}, {"n", n}, {"k", k}}), std::move(lhs), std::move(rhs),
                     std::move(cross));
}

IdentityReport check_eq8_corrected(long n, QEulerTable& table) {
  require(n >= 1, "E8 requires n >= 1");
  RationalFunction lhs = RationalFunction::q() * qcore::q_euler_polynomial(n, 1, table) + table.get(n);
  return make_report(IdentityId::E8corrected, params({{"n", n}}), std::move(lhs), RationalFunction(0));
}

IdentityReport check_eq8_printed(long n, QEulerTable& table) {
  require(n >= 1, "E8 requires n >= 1");
  RationalFunction lhs = RationalFunction::q() * qcore::q_euler_polynomial(n, 1, table) + table.get(n);
  return make_report(IdentityId::E8printed, params({{"n", n}}), std::move(lhs), RationalFunction(1));
}

}  // namespace qeuler::identities
