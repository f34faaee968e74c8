#include <benchmark/benchmark.h>

#include <memory>

#include "dominoes/domino.hpp"
#include "dominoes/generating.hpp"
#include "dominoes/labeled.hpp"
#include "dominoes/partition.hpp"
#include "dominoes/shuffle_checks.hpp"

namespace {

using dominoes::Partition;

void BM_PolynomialPaths(benchmark::State& state) {
  const Partition shape = Partition::square(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dominoes::p_lambda(shape, dominoes::Backend::paths));
}
BENCHMARK(BM_PolynomialPaths)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PolynomialTilings(benchmark::State& state) {
  const Partition shape = Partition::square(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dominoes::p_lambda(shape, dominoes::Backend::tilings));
}
BENCHMARK(BM_PolynomialTilings)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CountAztecTilings(benchmark::State& state) {
  auto region = std::make_shared<const dominoes::Region>(dominoes::Region::aztec_diamond(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(dominoes::count_tilings(region));
  state.counters["tilings"] = static_cast<double>(dominoes::count_tilings(region));
}
BENCHMARK(BM_CountAztecTilings)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_VerifyShuffle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(dominoes::verify_shuffle(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyShuffle)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LabeledPolynomial(benchmark::State& state) {
  const Partition shape({static_cast<int>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(dominoes::labeled_generating_polynomial(shape));
}
BENCHMARK(BM_LabeledPolynomial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
