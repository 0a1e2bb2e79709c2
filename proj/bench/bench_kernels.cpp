// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "cswitch/counting.hpp"
#include "cswitch/sweep.hpp"

namespace {

using namespace cswitch;

void BM_SweepParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config_space_size(n)));
}

void BM_SweepSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep_serial(n));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config_space_size(n)));
}

void BM_ExperimentParallel(benchmark::State& state) {
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  const NoiseModel m = NoiseModel::calibrated_default(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_full_experiment(ExperimentTable::TwoFunction, m, shots));
  }
}

void BM_ExperimentSerial(benchmark::State& state) {
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  const NoiseModel m = NoiseModel::calibrated_default(7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_full_experiment_serial(ExperimentTable::TwoFunction, m, shots));
  }
}

BENCHMARK(BM_SweepParallel)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSerial)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExperimentParallel)->Arg(60000)->Arg(600000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ExperimentSerial)->Arg(60000)->Arg(600000)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
