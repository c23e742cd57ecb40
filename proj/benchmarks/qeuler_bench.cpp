#include "qeuler/qeuler.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

namespace {

using namespace qeuler;

void BM_QEulerRecurrence(benchmark::State& state) {
  for (auto _ : state) {
    qcore::QEulerTable table;
    benchmark::DoNotOptimize(table.get(state.range(0)));
  }
}
BENCHMARK(BM_QEulerRecurrence)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_QEulerClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(qcore::q_euler_number_closed(state.range(0)));
}
BENCHMARK(BM_QEulerClosedForm)->Arg(8)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

field::detail::IntPoly random_poly(std::mt19937_64& rng, long degree) {
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  field::detail::IntPoly p(degree + 1);
  for (auto& c : p) c = coeff(rng);
  if (p.back() == 0) p.back() = 1;
  return p;
}

void BM_GcdHeuristic(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto common = random_poly(rng, state.range(0) / 2);
  const auto f = field::detail::mul(random_poly(rng, state.range(0)), common);
  const auto g = field::detail::mul(random_poly(rng, state.range(0)), common);
  for (auto _ : state) benchmark::DoNotOptimize(field::detail::gcd(f, g));
}
BENCHMARK(BM_GcdHeuristic)->Arg(10)->Arg(40)->Arg(100);

void BM_GcdRemainderSequence(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto common = random_poly(rng, state.range(0) / 2);
  const auto f = field::detail::mul(random_poly(rng, state.range(0)), common);
  const auto g = field::detail::mul(random_poly(rng, state.range(0)), common);
  for (auto _ : state) benchmark::DoNotOptimize(field::detail::gcd_primitive_prs(f, g));
}
BENCHMARK(BM_GcdRemainderSequence)->Arg(10)->Arg(40);

void BM_TruncatedSum(benchmark::State& state) {
  const padic::PadicContext ctx(3, 4, static_cast<int>(state.range(0)));
  const auto spec = padic::IntegrandSpec::power(3);
  for (auto _ : state) benchmark::DoNotOptimize(padic::truncated_integral(spec, ctx, ctx.max_n()));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(std::pow(3, state.range(0))));
}
BENCHMARK(BM_TruncatedSum)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_IdentitySuite(benchmark::State& state) {
  identities::SuiteConfig config;
  config.threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    qcore::QEulerTable table;
    benchmark::DoNotOptimize(identities::run_suite(config, {}, table));
  }
}
BENCHMARK(BM_IdentitySuite)->Arg(1)->Arg(4)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
