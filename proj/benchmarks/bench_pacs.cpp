#include <benchmark/benchmark.h>

#include "pacs/correlations.hpp"
#include "pacs/fock_oracle.hpp"

namespace {

using namespace pacs;

void BM_Laguerre(benchmark::State& state) {
  const LaguerreOrder m(static_cast<int>(state.range(0)));
  double x = 1.7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(laguerre(m, x));
    benchmark::ClobberMemory();
  }
}
BENCHMARK(BM_Laguerre)->Arg(1)->Arg(4)->Arg(16)->Arg(64);

void BM_Report(benchmark::State& state) {
  const ModelParams p(0.8, static_cast<int>(state.range(0)), Parity::odd);
  for (auto _ : state) benchmark::DoNotOptimize(report(p));
}
BENCHMARK(BM_Report)->Arg(0)->Arg(4);

void BM_DiscordNumeric(benchmark::State& state) {
  const ModelParams p(0.8, 2, Parity::even);
  const auto rho12 = oracle::partial_trace(oracle::build_tripartite(p, oracle::truncation_nmax(p)), {0, 1});
  for (auto _ : state) benchmark::DoNotOptimize(oracle::discord_numeric(rho12, oracle::Side::first));
}
BENCHMARK(BM_DiscordNumeric)->Unit(benchmark::kMicrosecond);

void BM_Verify(benchmark::State& state) {
  const ModelParams p(static_cast<double>(state.range(0)) / 10.0, 3, Parity::odd);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::verify(p));
}
BENCHMARK(BM_Verify)->Arg(1)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_Threshold(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(violation_threshold(LaguerreOrder(0), Parity::odd));
}
BENCHMARK(BM_Threshold)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
