// Serial reference vs OpenMP kernels. Set EXPBM_THREADS (or OMP_NUM_THREADS) to vary workers.
#include <benchmark/benchmark.h>

#include "expbm/density.hpp"
#include "expbm/montecarlo.hpp"
#include "expbm/parallel.hpp"
#include "expbm/phi_kernels.hpp"
#include "expbm/special_functions.hpp"

namespace {

const std::vector<double>& grid() {
  static const auto g = expbm::lambda_grid(0.25, 2.0, 0.01);
  return g;
}

void BM_TabulateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expbm::tabulate_serial(grid(), 1.0));
}

void BM_TabulateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(expbm::tabulate(grid(), 1.0));
}

expbm::McConfig mc_config() {
  expbm::McConfig cfg;
  cfg.paths = 20000;
  cfg.steps_per_unit_time = 64;
  cfg.t = 1.0;
  return cfg;
}

void BM_McSerial(benchmark::State& state) {
  const auto cfg = mc_config();
  for (auto _ : state) benchmark::DoNotOptimize(expbm::mc_sample_serial(cfg));
}

void BM_McParallel(benchmark::State& state) {
  const auto cfg = mc_config();
  for (auto _ : state) benchmark::DoNotOptimize(expbm::mc_sample(cfg));
}

void BM_SingleDensity(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(expbm::density({1.0, t}));
}

BENCHMARK(BM_TabulateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TabulateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_McParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SingleDensity)->Arg(10)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

}  // namespace

int main(int argc, char** argv) {
  expbm::apply_worker_threads();
  expbm::shared_dm_table(expbm::kMaxPhiOrder);  // keep the one-off table build out of the timings
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
