#include <benchmark/benchmark.h>

#include "qbpd/analysis.hpp"
#include "qbpd/moves.hpp"
#include "qbpd/oracle.hpp"

using namespace qbpd;

static void BM_EnumerateUnpaired(benchmark::State& state) {
  const Permutation w = Permutation::parse("615432");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_unpaired(w));
}
BENCHMARK(BM_EnumerateUnpaired)->Unit(benchmark::kMillisecond);

static void BM_EnumerateQbpds(benchmark::State& state) {
  const Permutation w = Permutation::parse("615432");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_qbpds(w));
}
BENCHMARK(BM_EnumerateQbpds)->Unit(benchmark::kMillisecond);

static void BM_CancellationStats(benchmark::State& state) {
  const Permutation w = Permutation::parse("615432");
  for (auto _ : state) benchmark::DoNotOptimize(cancellation_stats(w));
}
BENCHMARK(BM_CancellationStats)->Unit(benchmark::kMillisecond);

static void BM_BruteForce(benchmark::State& state) {
  const Permutation w = Permutation::parse(state.range(0) == 4 ? "4132" : "51432");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_enumerate(w));
}
BENCHMARK(BM_BruteForce)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_DefiningOracleS5(benchmark::State& state) {
  const auto perms = enumerate_symmetric_group(5);
  for (auto _ : state)
    for (const auto& w : perms) benchmark::DoNotOptimize(quantum_double_schubert_defining(w));
}
BENCHMARK(BM_DefiningOracleS5)->Unit(benchmark::kMillisecond);

static void BM_TransitionOracle(benchmark::State& state) {
  const Permutation w = Permutation::longest(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    TransitionOracle oracle(w.size());
    benchmark::DoNotOptimize(oracle(w));
  }
}
BENCHMARK(BM_TransitionOracle)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

static void BM_SweepS5(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep(5, 1));
}
BENCHMARK(BM_SweepS5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
