#include "cli.hpp"

#include "qeuler/qeuler.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

namespace qeuler::cli {

namespace {

using json = nlohmann::ordered_json;
using field::BigRational;
using field::RationalFunction;

constexpr const char* kVersion = QEULER_VERSION;

/// A usage problem detected after flag parsing (exit 2).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json record(const std::string& command, json params, json result) {
  json r;
  r["command"] = command;
  r["params"] = std::move(params);
  r["result"] = std::move(result);
  r["artifactVersion"] = kVersion;
  return r;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Flags describing an integrand, shared by compute and convergence.
struct IntegrandFlags {
  std::optional<long> power_n;
  long shift = 0;
  std::string base = "q";
  bool reflected = false;
  std::string measure = "q";
  std::string bernstein;

  void attach(CLI::App* app) {
    app->add_option("--power-n", power_n, "degree n of the power integrand [x+a]^n");
    app->add_option("--shift", shift, "shift a of the power integrand");
    app->add_option("--base", base, "parameter of the power integrand")->check(CLI::IsMember({"q", "1/q"}));
    app->add_flag("--reflected", reflected, "use [1-x+a]^n instead of [x+a]^n");
    app->add_option("--measure", measure, "measure parameter (mu_{-q} or mu_{-1/q})")
        ->check(CLI::IsMember({"q", "1/q"}));
    app->add_option("--bernstein", bernstein, "Bernstein product as k:n[,k:n...]");
  }

  padic::IntegrandSpec spec(std::optional<long> fallback_n) const {
    const padic::Base m = measure == "q" ? padic::Base::q : padic::Base::inverse_q;
    if (!bernstein.empty()) {
      padic::BernsteinProduct bp;
      std::string_view rest = bernstein;
      while (!rest.empty()) {
        const auto comma = rest.find(',');
        const std::string_view item = rest.substr(0, comma);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) throw UsageError("--bernstein expects k:n pairs, got '" + std::string(item) + "'");
        bp.factors.emplace_back(parse_long(item.substr(0, colon)), parse_long(item.substr(colon + 1)));
      }
      return padic::IntegrandSpec{std::move(bp), m};
    }
    const auto n = power_n ? power_n : fallback_n;
    if (!n) throw UsageError("integrand needs --power-n (or --n) or --bernstein");
    if (*n < 0) throw UsageError("--power-n must be non-negative");
    const padic::Base b = base == "q" ? padic::Base::q : padic::Base::inverse_q;
    return padic::IntegrandSpec{padic::ShiftedPower{shift, *n, b, reflected}, m};
  }

  json describe(std::optional<long> fallback_n) const {
    json j;
    if (!bernstein.empty()) {
      j["bernstein"] = bernstein;
    } else {
      if (auto n = power_n ? power_n : fallback_n) j["power-n"] = *n;
      j["shift"] = shift;
      j["base"] = base;
      j["reflected"] = reflected;
    }
    j["measure"] = measure;
    return j;
  }

  static long parse_long(std::string_view s) {
    long v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw UsageError("expected an integer, got '" + std::string(s) + "'");
    return v;
  }
};

BigRational parse_q0(const std::string& text, const char* flag) {
  try {
    return field::parse_rational(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

// ---- compute ---------------------------------------------------------------

struct ComputeArgs {
  std::string kind;
  std::optional<long> n;
  std::optional<long> k;
  std::optional<long> x;
  std::optional<std::string> at;
  IntegrandFlags integrand;
};

long need(const std::optional<long>& v, const char* flag, const std::string& kind) {
  if (!v) throw UsageError(kind + " requires " + flag);
  return *v;
}

int do_compute(const ComputeArgs& a, std::ostream& out) {
  json params;
  params["kind"] = a.kind;
  RationalFunction value;
  std::optional<BigRational> scalar;

  if (a.kind == "classical-euler") {
    const long n = need(a.n, "--n", a.kind);
    if (n < 0) throw UsageError("--n must be non-negative");
    params["n"] = n;
    scalar = qcore::classical_euler(n);
  } else if (a.kind == "euler-number") {
    const long n = need(a.n, "--n", a.kind);
    if (n < 0) throw UsageError("--n must be non-negative");
    params["n"] = n;
    value = qcore::q_euler_number(n);
  } else if (a.kind == "euler-poly") {
    const long n = need(a.n, "--n", a.kind);
    const long x = need(a.x, "--x", a.kind);
    if (n < 0) throw UsageError("--n must be non-negative");
    params["n"] = n;
    params["x"] = x;
    value = qcore::q_euler_polynomial(n, x);
  } else if (a.kind == "bernstein") {
    const long n = need(a.n, "--n", a.kind);
    const long k = need(a.k, "--k", a.kind);
    const long x = need(a.x, "--x", a.kind);
    if (k < 0 || n < 0 || k > n) throw UsageError("bernstein requires 0 <= k <= n");
    params["k"] = k;
    params["n"] = n;
    params["x"] = x;
    value = qcore::bernstein(qcore::BernsteinIndex(k, n), x);
  } else if (a.kind == "integral-closed-form") {
    params["integrand"] = a.integrand.describe(a.n);
    value = padic::closed_form_of(a.integrand.spec(a.n));
  } else {
    throw UsageError("unknown kind '" + a.kind + "'");
  }

  if (a.at) {
    const BigRational q0 = parse_q0(*a.at, "--at");
    params["at"] = field::to_string(q0);
    if (scalar) throw UsageError("--at does not apply to classical-euler");
    try {
      scalar = field::evaluate(value, q0);
    } catch (const field::PoleError& e) {
      throw UsageError(e.what());
    }
  }
  emit(out, record("compute", std::move(params), scalar ? field::to_string(*scalar) : field::to_string(value)));
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string id = "all";
  identities::SuiteConfig config;
};

int do_verify(const VerifyArgs& a, std::ostream& out) {
  std::set<identities::IdentityId> only;
  if (a.id != "all") {
    const auto id = identities::parse_identity_id(a.id);
    if (!id) throw UsageError("unknown identity '" + a.id + "'");
    only.insert(*id);
  }
  const auto& c = a.config;
  if (c.n_max < 0 || c.m_max < 0 || c.k_max < 0 || c.s_max < 0 || c.part_max < 0 || c.t9_k_max < 0 ||
      c.x_min > c.x_max) {
    throw UsageError("grid bounds must be non-negative and x-min <= x-max");
  }
  const auto result = identities::run_suite(c, only);

  json params;
  params["id"] = a.id;
  params["n-max"] = c.n_max;
  params["m-max"] = c.m_max;
  params["k-max"] = c.k_max;
  params["x-min"] = c.x_min;
  params["x-max"] = c.x_max;
  params["s-max"] = c.s_max;
  params["part-max"] = c.part_max;
  params["t9-k-max"] = c.t9_k_max;

  json reports = json::array();
  std::size_t asserted = 0, failed = 0;
  for (const auto& r : result.reports) {
    reports.push_back(identities::to_json(r));
    if (r.asserted) {
      ++asserted;
      if (!r.holds) ++failed;
    }
  }
  json skipped = json::array();
  for (const auto& s : result.skipped) skipped.push_back(identities::to_json(s));

  json summary;
  summary["reports"] = result.reports.size();
  summary["asserted"] = asserted;
  summary["failed"] = failed;
  summary["recorded"] = result.reports.size() - asserted;
  summary["skipped"] = result.skipped.size();

  json body;
  body["summary"] = std::move(summary);
  body["reports"] = std::move(reports);
  body["skipped"] = std::move(skipped);
  emit(out, record("verify", std::move(params), std::move(body)));
  return result.all_asserted_hold() ? kExitOk : kExitAssertionFailed;
}

// ---- convergence -------------------------------------------------------------

struct ConvergenceArgs {
  long p = 0;
  std::string q0;
  int max_n = 0;
  bool csv = false;
  IntegrandFlags integrand;
};

int do_convergence(const ConvergenceArgs& a, std::ostream& out) {
  if (a.p <= 0) throw UsageError("--p must be an odd prime");
  const BigRational q0 = parse_q0(a.q0, "--q");
  std::optional<padic::PadicContext> ctx;
  try {
    ctx.emplace(static_cast<unsigned long>(a.p), q0, a.max_n);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  const padic::IntegrandSpec spec = a.integrand.spec(std::nullopt);
  const RationalFunction exact = padic::closed_form_of(spec);
  padic::PadicProbe probe = [&] {
    try {
      return padic::probe_convergence(spec, *ctx, exact);
    } catch (const field::PoleError& e) {
      throw UsageError(e.what());
    }
  }();
  const int code = probe.non_decreasing() ? kExitOk : kExitAssertionFailed;

  if (a.csv) {
    out << "N,S_N,valuation\n";
    for (std::size_t i = 0; i < probe.partials.size(); ++i) {
      out << probe.partials[i].first << ',' << field::to_string(probe.partials[i].second) << ','
          << padic::to_string(probe.residual_valuations[i].second) << '\n';
    }
    return code;
  }

  json params;
  params["p"] = a.p;
  params["q"] = field::to_string(q0);
  params["max-N"] = a.max_n;
  params["integrand"] = a.integrand.describe(std::nullopt);

  json rows = json::array();
  for (std::size_t i = 0; i < probe.partials.size(); ++i) {
    json row;
    row["N"] = probe.partials[i].first;
    row["S_N"] = field::to_string(probe.partials[i].second);
    const auto& v = probe.residual_valuations[i].second;
    if (v.is_infinite()) {
      row["valuation"] = "inf";
    } else {
      row["valuation"] = v.value();
    }
    rows.push_back(std::move(row));
  }
  json body;
  body["exact"] = field::to_string(exact);
  body["exactValue"] = field::to_string(probe.exact_value);
  body["nonDecreasing"] = probe.non_decreasing();
  body["rows"] = std::move(rows);
  emit(out, record("convergence", std::move(params), std::move(body)));
  return code;
}

// ---- table -----------------------------------------------------------------

struct TableArgs {
  std::string range;
  std::optional<std::string> q0;
  bool csv = false;
};

std::pair<long, long> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const long v = IntegrandFlags::parse_long(text);
      return {v, v};
    }
    return {IntegrandFlags::parse_long(std::string_view(text).substr(0, dots)),
            IntegrandFlags::parse_long(std::string_view(text).substr(dots + 2))};
  } catch (const UsageError&) {
    throw UsageError("--n expects a range A..B, got '" + text + "'");
  }
}

int do_table(const TableArgs& a, std::ostream& out) {
  const auto [lo, hi] = parse_range(a.range);
  if (lo < 0 || lo > hi) throw UsageError("--n range must satisfy 0 <= A <= B");
  std::optional<BigRational> q0;
  if (a.q0) q0 = parse_q0(*a.q0, "--q");

  std::vector<std::pair<long, std::string>> rows;
  for (long n = lo; n <= hi; ++n) {
    const RationalFunction xi = qcore::q_euler_number(n);
    if (q0) {
      try {
        rows.emplace_back(n, field::to_string(field::evaluate(xi, *q0)));
      } catch (const field::PoleError& e) {
        throw UsageError(e.what());
      }
    } else {
      rows.emplace_back(n, field::to_string(xi));
    }
  }
  const char* column = q0 ? "value" : "xi";

  if (a.csv) {
    out << "n," << column << '\n';
    for (const auto& [n, v] : rows) {
      // Quote symbolic entries: they contain spaces and '/'.
      if (q0) {
        out << n << ',' << v << '\n';
      } else {
        out << n << ",\"" << v << "\"\n";
      }
    }
    return kExitOk;
  }

  json params;
  params["n"] = std::to_string(lo) + ".." + std::to_string(hi);
  if (q0) params["q"] = field::to_string(*q0);
  json body = json::array();
  for (const auto& [n, v] : rows) {
    json row;
    row["n"] = n;
    row[column] = v;
    body.push_back(std::move(row));
  }
  emit(out, record("table", std::move(params), std::move(body)));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact q-Euler numbers, q-Bernstein integrals and fermionic p-adic q-integrals", "qeuler"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "compute one exact value");
  c->add_option("kind", compute.kind, "euler-number | euler-poly | bernstein | classical-euler | integral-closed-form")
      ->required();
  c->add_option("--n", compute.n, "degree n");
  c->add_option("--k", compute.k, "Bernstein index k");
  c->add_option("--x", compute.x, "integer argument x");
  c->add_option("--at", compute.at, "evaluate at this rational q0");
  compute.integrand.attach(c);

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "check identities over a parameter grid");
  v->add_option("--id", verify.id, "identity id (T1, P2, ..., T9printed) or 'all'");
  v->add_option("--n-max", verify.config.n_max, "largest n");
  v->add_option("--m-max", verify.config.m_max, "largest m");
  v->add_option("--k-max", verify.config.k_max, "largest k");
  v->add_option("--x-min", verify.config.x_min, "smallest x");
  v->add_option("--x-max", verify.config.x_max, "largest x");
  v->add_option("--s-max", verify.config.s_max, "largest number of Bernstein factors");
  v->add_option("--part-max", verify.config.part_max, "largest n_i in the s-fold identities");
  v->add_option("--t9-k-max", verify.config.t9_k_max, "largest k in the s-fold identities");
  v->add_option("--threads", verify.config.threads, "worker threads");

  ConvergenceArgs conv;
  auto* g = app.add_subcommand("convergence", "truncated fermionic sums and their p-adic residuals");
  g->add_option("--p", conv.p, "odd prime p")->required();
  g->add_option("--q", conv.q0, "rational q0 with |1-q0|_p < 1")->required();
  g->add_option("--max-N", conv.max_n, "largest truncation exponent N")->required();
  g->add_flag("--csv", conv.csv, "emit CSV instead of JSON");
  conv.integrand.attach(g);

  TableArgs table;
  auto* t = app.add_subcommand("table", "tabulate q-Euler numbers");
  t->add_option("--n", table.range, "range A..B")->required();
  t->add_option("--q", table.q0, "specialize at this rational q0");
  t->add_flag("--csv", table.csv, "emit CSV instead of JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (c->parsed()) return do_compute(compute, out);
    if (v->parsed()) return do_verify(verify, out);
    if (g->parsed()) return do_convergence(conv, out);
    return do_table(table, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const padic::UnsupportedSpec& e) {
    err << "error: unsupported integrand: " << e.what() << '\n';
    return kExitUnsupported;
  }
}

}  // namespace qeuler::cli
