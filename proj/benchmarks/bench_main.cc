#include <numbers>
#include <numeric>

#include <benchmark/benchmark.h>

#include "hamcert/casestudies.h"
#include "hamcert/certify.h"
#include "hamcert/spectra.h"
#include "hamcert/sweep.h"

namespace {

using namespace hamcert;

void BM_Svd(benchmark::State& state) {
  Rng rng = trial_rng(1, 0);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const ComplexMatrix m = gaussian_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd)->RangeMultiplier(2)->Range(2, 64);

void BM_Eig(benchmark::State& state) {
  Rng rng = trial_rng(1, 1);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const ComplexMatrix m = gaussian_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(eig(m));
}
BENCHMARK(BM_Eig)->RangeMultiplier(2)->Range(2, 64);

void BM_EigenvaluesExtended(benchmark::State& state) {
  Rng rng = trial_rng(1, 2);
  const auto n = static_cast<Eigen::Index>(state.range(0));
  const ComplexMatrix m = gaussian_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_extended(m));
}
BENCHMARK(BM_EigenvaluesExtended)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_CertifyAllNonnegative(benchmark::State& state) {
  Rng rng = trial_rng(2, 0);
  const auto blocks = random_nonnegative_blocks(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(certify_each(blocks));
}
BENCHMARK(BM_CertifyAllNonnegative)->Arg(2)->Arg(8)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_CertifyAllCounterexample(benchmark::State& state) {
  const double gamma = std::numbers::pi * std::numbers::pi;
  const auto blocks = counterexample_family({gamma, static_cast<int>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(certify_all(blocks));
}
BENCHMARK(BM_CertifyAllCounterexample)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_CounterexampleTrend(benchmark::State& state) {
  std::vector<int> ms(static_cast<std::size_t>(state.range(0)));
  std::iota(ms.begin(), ms.end(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(counterexample_trend(1.0, ms));
}
BENCHMARK(BM_CounterexampleTrend)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_PlateClaimCheck(benchmark::State& state) {
  const PlateConfig cfg{static_cast<int>(state.range(0)), 1.0, PlateScheme::SineSpectral};
  for (auto _ : state) benchmark::DoNotOptimize(plate_claim_check(cfg));
}
BENCHMARK(BM_PlateClaimCheck)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_Spectrum(benchmark::State& state) {
  Rng rng = trial_rng(3, 0);
  const auto blocks = random_pd_blocks(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(blocks));
}
BENCHMARK(BM_Spectrum)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_Sweep(benchmark::State& state) {
  SweepConfig cfg;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg));
}
BENCHMARK(BM_Sweep)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
