// Serial reference versus the OpenMP kernel for one symbol's Monte-Carlo run.

#include <benchmark/benchmark.h>

#include "omc/domain.hpp"
#include "omc/psychophysics.hpp"
#include "omc/simulation.hpp"

namespace {

omc::ExperimentConfig bench_config(std::int64_t trials) {
  auto cfg = omc::paper_defaults();
  cfg.trial_count = static_cast<std::uint64_t>(trials);
  return cfg;
}

void BM_Serial(benchmark::State& state) {
  const auto cfg = bench_config(state.range(0));
  const auto scheme = omc::build_scheme(cfg);
  for (auto _ : state) {
    benchmark::DoNotOptimize(omc::run_symbol_trials_serial(scheme, 1, cfg));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_OpenMP(benchmark::State& state) {
  const auto cfg = bench_config(state.range(0));
  const auto scheme = omc::build_scheme(cfg);
  const omc::ExecutionOptions exec{static_cast<int>(state.range(1))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(omc::run_symbol_trials(scheme, 1, cfg, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OpenMP)
    ->ArgsProduct({{100000, 1000000}, {1, 2, 4, 8}})
    ->ArgNames({"trials", "threads"})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

BENCHMARK_MAIN();
