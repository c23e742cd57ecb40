#include "qeuler/identities/suite.hpp"

#include "qeuler/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <tuple>
#include <variant>

namespace qeuler::identities {

bool SuiteResult::all_asserted_hold() const {
  return std::all_of(reports.begin(), reports.end(), [](const IdentityReport& r) { return !r.asserted || r.holds; });
}

namespace {

struct Task {
  IdentityId id;
  IdentityParams params;  // used to describe a skipped entry
  std::function<IdentityReport()> run;
};

using Outcome = std::variant<IdentityReport, SkippedEntry>;

IdentityParams named(std::initializer_list<std::pair<std::string, long>> values, std::string branch = {}) {
  return IdentityParams{{values.begin(), values.end()}, {}, std::move(branch)};
}

// Every n-list of length 1..s_max with entries in [0, part_max], in
// lexicographic order.
std::vector<std::vector<long>> part_lists(long s_max, long part_max) {
  std::vector<std::vector<long>> out;
  for (long s = 1; s <= s_max; ++s) {
    std::vector<long> cur(static_cast<std::size_t>(s), 0);
    while (true) {
      out.push_back(cur);
      long i = s - 1;
      while (i >= 0 && cur[static_cast<std::size_t>(i)] == part_max) {
        cur[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++cur[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<Task> build_tasks(const SuiteConfig& c, const std::set<IdentityId>& only, QEulerTable& table) {
  auto wanted = [&only](IdentityId id) { return only.empty() || only.count(id) > 0; };
  std::vector<Task> tasks;
  QEulerTable* t = &table;

  for (long n = 0; n <= c.n_max; ++n) {
    if (wanted(IdentityId::T1)) tasks.push_back({IdentityId::T1, named({{"n", n}}), [=] { return check_theorem1(n, *t); }});
    if (wanted(IdentityId::P2)) tasks.push_back({IdentityId::P2, named({{"n", n}}), [=] { return check_prop2(n, *t); }});
    if (wanted(IdentityId::C4)) tasks.push_back({IdentityId::C4, named({{"n", n}}), [=] { return check_cor4(n, *t); }});
    if (wanted(IdentityId::T5)) tasks.push_back({IdentityId::T5, named({{"n", n}}), [=] { return check_theorem5(n, *t); }});
    if (wanted(IdentityId::E8corrected)) {
      tasks.push_back({IdentityId::E8corrected, named({{"n", n}}), [=] { return check_eq8_corrected(n, *t); }});
    }
    if (wanted(IdentityId::E8printed)) {
      tasks.push_back({IdentityId::E8printed, named({{"n", n}}), [=] { return check_eq8_printed(n, *t); }});
    }
    if (wanted(IdentityId::C7)) {
      tasks.push_back({IdentityId::C7, named({{"n", n}}, "moreover"), [=] { return check_cor7_moreover(n, *t); }});
    }
    for (long x = c.x_min; x <= c.x_max; ++x) {
      if (wanted(IdentityId::P3)) {
        tasks.push_back({IdentityId::P3, named({{"n", n}, {"x", x}}), [=] { return check_prop3(n, x, *t); }});
      }
    }
    for (long k = 0; k <= c.k_max; ++k) {
      if (wanted(IdentityId::T6)) {
        tasks.push_back({IdentityId::T6, named({{"n", n}, {"k", k}}), [=] { return check_theorem6(n, k, *t); }});
      }
      if (wanted(IdentityId::C7)) {
        tasks.push_back({IdentityId::C7, named({{"n", n}, {"k", k}}), [=] { return check_cor7(n, k, *t); }});
      }
      if (wanted(IdentityId::E18v20)) {
        tasks.push_back({IdentityId::E18v20, named({{"n", n}, {"k", k}}), [=] { return check_eq18_vs_20(n, k, *t); }});
      }
      for (long x = c.x_min; x <= c.x_max; ++x) {
        if (wanted(IdentityId::E19)) {
          tasks.push_back({IdentityId::E19, named({{"n", n}, {"k", k}, {"x", x}}), [=] { return check_eq19(n, k, x); }});
        }
      }
      for (long m = 0; m <= c.m_max; ++m) {
        if (wanted(IdentityId::T8)) {
          tasks.push_back({IdentityId::T8, named({{"m", m}, {"n", n}, {"k", k}}, k == 0 ? "moreover" : ""),
                           [=] { return check_theorem8(m, n, k, *t); }});
        }
        if (wanted(IdentityId::E21v23)) {
          tasks.push_back({IdentityId::E21v23, named({{"m", m}, {"n", n}, {"k", k}}),
                           [=] { return check_eq21_vs_23(m, n, k, *t); }});
        }
      }
    }
  }

  if (wanted(IdentityId::T9) || wanted(IdentityId::T9printed)) {
    for (const auto& parts : part_lists(c.s_max, c.part_max)) {
      const long s = static_cast<long>(parts.size());
      for (long k = 0; k <= c.t9_k_max && wanted(IdentityId::T9); ++k) {
        IdentityParams p{{{"s", s}, {"k", k}}, parts, k == 0 ? "moreover" : ""};
        tasks.push_back({IdentityId::T9, std::move(p), [=] { return check_theorem9(parts, k, *t); }});
      }
      if (wanted(IdentityId::T9printed)) {
        IdentityParams p{{{"s", s}, {"k", 0}}, parts, "moreover"};
        tasks.push_back({IdentityId::T9printed, std::move(p), [=] { return check_theorem9_printed(parts, *t); }});
      }
    }
  }
  return tasks;
}

Outcome run_task(const Task& task) {
  try {
    return task.run();
  } catch (const PreconditionError& e) {
    return SkippedEntry{task.id, task.params, e.what()};
  }
}

}  // namespace

SuiteResult run_suite(const SuiteConfig& config, const std::set<IdentityId>& only, QEulerTable& table) {
  const std::vector<Task> tasks = build_tasks(config, only, table);
  std::vector<std::optional<Outcome>> outcomes(tasks.size());

  const unsigned workers = std::max(1u, std::min<unsigned>(config.threads, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) outcomes[i] = run_task(tasks[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) outcomes[i] = run_task(tasks[i]);
      });
    }
  }

  SuiteResult result;
  for (auto& o : outcomes) {
    if (auto* report = std::get_if<IdentityReport>(&*o)) {
      result.reports.push_back(std::move(*report));
    } else {
      result.skipped.push_back(std::get<SkippedEntry>(std::move(*o)));
    }
  }
  std::sort(result.reports.begin(), result.reports.end(), report_less);
  std::sort(result.skipped.begin(), result.skipped.end(), [](const SkippedEntry& a, const SkippedEntry& b) {
    return std::tie(a.id, a.params) < std::tie(b.id, b.params);
  });
  return result;
}

}  // namespace qeuler::identities
