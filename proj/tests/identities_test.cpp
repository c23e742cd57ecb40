#include "qeuler/errors.hpp"
#include "qeuler/exactfield/format.hpp"
#include "qeuler/identities/checks.hpp"
#include "qeuler/identities/serialize.hpp"
#include "qeuler/identities/suite.hpp"
#include "qeuler/padic/padic.hpp"
#include "qeuler/qcore/euler.hpp"

#include <gtest/gtest.h>

namespace qeuler::identities {
namespace {

using field::BigRational;
using field::make_rational;
using field::parse_rational_function;

const RationalFunction kDegreeOneValue = parse_rational_function("(1 + q + q^2) / (1 + q^2)");

void expect_holds(const IdentityReport& r) {
  EXPECT_TRUE(r.holds) << to_string(r.id) << ' ' << r.params.to_string() << " residual "
                       << field::to_string(r.residual);
  EXPECT_TRUE(r.residual.is_zero());
}

TEST(Identities, T1ShiftByTwo) {
  const auto r = check_theorem1(1);
  expect_holds(r);
  EXPECT_EQ(r.lhs, kDegreeOneValue);
  expect_holds(check_theorem1(2));
  EXPECT_THROW(check_theorem1(0), PreconditionError);
}

TEST(Identities, P2AlternatingSum) {
  EXPECT_EQ(check_prop2(0).lhs, RationalFunction(1));
  const auto r = check_prop2(1);
  expect_holds(r);
  EXPECT_EQ(r.rhs, kDegreeOneValue);
  ASSERT_TRUE(r.cross.has_value());
  EXPECT_EQ(*r.cross, kDegreeOneValue);
  expect_holds(check_prop2(2));
}

TEST(Identities, P3ReflectedIntegral) {
  for (long x = -2; x <= 3; ++x) {
    const auto r = check_prop3(0, x);
    expect_holds(r);
    EXPECT_EQ(r.lhs, RationalFunction(1));
  }
  expect_holds(check_prop3(1, 0));
  expect_holds(check_prop3(2, 1));
}

TEST(Identities, C4AndT5InverseParameter) {
  EXPECT_EQ(check_cor4(0).lhs, RationalFunction(1));
  const auto c = check_cor4(1);
  expect_holds(c);
  EXPECT_EQ(c.lhs, kDegreeOneValue);
  expect_holds(check_cor4(3));

  const auto t = check_theorem5(1);
  expect_holds(t);
  EXPECT_EQ(t.lhs, kDegreeOneValue);
  expect_holds(check_theorem5(2));
  EXPECT_THROW(check_theorem5(0), PreconditionError);
}

TEST(Identities, T6SingleBernstein) {
  const auto zero = check_theorem6(0, 0);
  expect_holds(zero);
  EXPECT_EQ(zero.lhs, RationalFunction(1));
  const auto r = check_theorem6(1, 0);
  expect_holds(r);
  EXPECT_EQ(r.lhs, qcore::q_euler_number(0) - qcore::q_euler_number(1));
  expect_holds(check_theorem6(3, 1));
  EXPECT_THROW(check_theorem6(1, 2), PreconditionError);
}

TEST(Identities, C7Branches) {
  expect_holds(check_cor7(2, 1));
  EXPECT_EQ(check_cor7_moreover(1).lhs, kDegreeOneValue);
  expect_holds(check_cor7_moreover(4));
  EXPECT_THROW(check_cor7(2, 2), PreconditionError);
  EXPECT_THROW(check_cor7(2, 0), PreconditionError);
}

TEST(Identities, T8BernsteinPair) {
  const auto r = check_theorem8(1, 1, 0);
  expect_holds(r);
  EXPECT_EQ(r.lhs, check_theorem5(2).lhs);
  EXPECT_EQ(r.params.branch, "moreover");
  expect_holds(check_theorem8(2, 2, 1));
  expect_holds(check_theorem8(3, 2, 2));
  EXPECT_THROW(check_theorem8(1, 1, 1), PreconditionError);
}

TEST(Identities, T9SFoldProduct) {
  expect_holds(check_theorem9({2, 2, 2}, 1));
  expect_holds(check_theorem9({1, 0, 3}, 0));
  EXPECT_THROW(check_theorem9({1, 1}, 1), PreconditionError);
  EXPECT_THROW(check_theorem9({}, 0), PreconditionError);
}

TEST(Identities, T9SpecializesToT6AndT8) {
  for (long n = 1; n <= 6; ++n) {
    for (long k = 0; k < n; ++k) {
      const auto t9 = check_theorem9({n}, k);
      const auto t6 = check_theorem6(n, k);
      EXPECT_EQ(t9.lhs, t6.lhs);
      EXPECT_EQ(t9.rhs, t6.rhs);
      EXPECT_EQ(t9.residual, t6.residual);
      EXPECT_EQ(t9.holds, t6.holds);
    }
  }
  for (long m = 0; m <= 4; ++m) {
    for (long n = 0; n <= 4; ++n) {
      for (long k = 0; 2 * k < m + n; ++k) {
        const auto t9 = check_theorem9({n, m}, k);
        const auto t8 = check_theorem8(m, n, k);
        EXPECT_EQ(t9.lhs, t8.lhs);
        EXPECT_EQ(t9.rhs, t8.rhs);
        EXPECT_EQ(t9.residual, t8.residual);
        EXPECT_EQ(t9.holds, t8.holds);
      }
    }
  }
}

TEST(Identities, BernsteinReflection) {
  const auto top = check_eq19(3, 3, 1);
  expect_holds(top);
  EXPECT_EQ(top.lhs, RationalFunction(1));
  const auto zero = check_eq19(2, 1, 0);
  expect_holds(zero);
  EXPECT_TRUE(zero.lhs.is_zero());
  expect_holds(check_eq19(3, 1, 2));
}

TEST(Identities, BernsteinIntegralExpansions) {
  for (long n = 0; n <= 5; ++n) {
    for (long k = 0; k <= n; ++k) expect_holds(check_eq18_vs_20(n, k));
  }
  expect_holds(check_eq21_vs_23(2, 3, 1));
  EXPECT_THROW(check_eq21_vs_23(1, 3, 2), PreconditionError);
}

TEST(Identities, PrintedVariantsFail) {
  for (long n = 1; n <= 10; ++n) {
    const auto printed = check_eq8_printed(n);
    EXPECT_FALSE(printed.holds) << n;
    EXPECT_FALSE(printed.asserted);
    expect_holds(check_eq8_corrected(n));
  }
  int failures = 0;
  for (const std::vector<long>& parts : std::vector<std::vector<long>>{{1}, {1, 1}, {2, 1}, {2, 2, 2}, {0, 3}}) {
    const auto printed = check_theorem9_printed(parts);
    EXPECT_FALSE(printed.asserted);
    if (!printed.holds) ++failures;
    expect_holds(check_theorem9(parts, 0));
  }
  EXPECT_GE(failures, 3);
}

TEST(Identities, ReportVerdictDefinition) {
  const auto ok = make_report(IdentityId::T1, {}, RationalFunction(2), RationalFunction(2));
  EXPECT_TRUE(ok.holds);
  const auto bad = make_report(IdentityId::T1, {}, RationalFunction(2), RationalFunction(3));
  EXPECT_FALSE(bad.holds);
  EXPECT_EQ(bad.residual, RationalFunction(-1));
  const auto cross_mismatch =
      make_report(IdentityId::T1, {}, RationalFunction(2), RationalFunction(2), RationalFunction(5));
  EXPECT_FALSE(cross_mismatch.holds);
}

TEST(Identities, IdNamesRoundTrip) {
  for (IdentityId id : kAllIdentities) EXPECT_EQ(parse_identity_id(to_string(id)), id);
  EXPECT_FALSE(parse_identity_id("bogus").has_value());
}

TEST(Identities, SidesAgreeUnderSpecialization) {
  SuiteConfig small;
  small.n_max = 5;
  small.m_max = 4;
  small.k_max = 3;
  small.x_min = -1;
  small.x_max = 2;
  small.s_max = 2;
  small.part_max = 3;
  const auto result = run_suite(small);
  const BigRational points[] = {make_rational(1, 2), make_rational(2, 3), BigRational(4)};
  int compared = 0;
  for (const auto& r : result.reports) {
    for (const auto& q0 : points) {
      try {
        const BigRational l = field::evaluate(r.lhs, q0), rr = field::evaluate(r.rhs, q0);
        if (r.asserted) EXPECT_EQ(l, rr) << to_string(r.id) << ' ' << r.params.to_string();
        ++compared;
      } catch (const field::PoleError&) {
      }
    }
  }
  EXPECT_GT(compared, 1000);
}

TEST(Identities, BernsteinMomentSideIsTheLimitOfTruncatedSums) {
  for (long n = 0; n <= 4; ++n) {
    for (long k = 0; k <= n; ++k) {
      const auto r = check_theorem6(n, k);
      padic::BernsteinProduct bp;
      bp.factors.emplace_back(k, n);
      const padic::IntegrandSpec spec{bp, padic::Base::q};
      const RationalFunction scaled = r.lhs * RationalFunction(BigRational(field::binomial(n, k)));
      const auto probe = padic::probe_convergence(spec, padic::PadicContext(3, 4, 5), scaled);
      for (const auto& [level, v] : probe.residual_valuations) EXPECT_GE(v, padic::Valuation(level));
    }
  }
}

TEST(Suite, SkipsOutOfRangePointsExplicitly) {
  SuiteConfig config;
  config.n_max = 2;
  config.x_min = 0;
  config.x_max = 0;
  const auto result = run_suite(config, {IdentityId::T1, IdentityId::T5});
  EXPECT_EQ(result.reports.size(), 4u);
  ASSERT_EQ(result.skipped.size(), 2u);
  EXPECT_EQ(result.skipped[0].id, IdentityId::T1);
  EXPECT_EQ(result.skipped[0].params.to_string(), "n=0");
  EXPECT_FALSE(result.skipped[0].reason.empty());
}

TEST(Suite, ParallelRunIsDeterministic) {
  SuiteConfig config;
  config.n_max = 5;
  config.m_max = 4;
  config.k_max = 2;
  config.s_max = 2;
  config.part_max = 3;
  const auto serial = run_suite(config);
  config.threads = 4;
  qcore::QEulerTable fresh;
  const auto parallel = run_suite(config, {}, fresh);
  ASSERT_EQ(serial.reports.size(), parallel.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    EXPECT_EQ(to_json(serial.reports[i]).dump(), to_json(parallel.reports[i]).dump());
  }
  ASSERT_EQ(serial.skipped.size(), parallel.skipped.size());
  EXPECT_TRUE(serial.all_asserted_hold());
}

TEST(Serialize, ReportFields) {
  const auto j = to_json(check_theorem1(1));
  EXPECT_EQ(j["identityId"], "T1");
  EXPECT_EQ(j["params"]["n"], 1);
  EXPECT_EQ(j["holds"], true);
  EXPECT_EQ(j["lhs"], "(1 + q + q^2) / (1 + q^2)");
  EXPECT_EQ(j["residual"], "0");
  const auto t9 = to_json(check_theorem9({2, 1}, 0));
  EXPECT_EQ(t9["params"]["parts"], nlohmann::ordered_json::array({2, 1}));
  EXPECT_EQ(t9["params"]["branch"], "moreover");
}

}  // namespace
}  // namespace qeuler::identities
