// Parallel vs serial grid kernels on the default 400x400 Ky Fan grid.

#include <benchmark/benchmark.h>

#include "kyfan/means.hpp"
#include "kyfan/verify.hpp"

namespace {

void BM_RatioKyFan(benchmark::State& state, kyfan::Execution execution) {
  const auto m = kyfan::find_mean("NS");
  const auto n = kyfan::find_mean("T");
  kyfan::GridSpec grid = kyfan::default_kyfan_grid();
  grid.nx = grid.ny = static_cast<std::size_t>(state.range(0));
  const kyfan::CheckOptions opts{kyfan::kMarginTolerance, execution};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kyfan::check_ratio_kyfan(m, n, grid, opts));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.size()));
}

void BM_RatioMonotone(benchmark::State& state, kyfan::Execution execution) {
  const auto m = kyfan::find_seiffert("arctan");
  const auto n = kyfan::find_seiffert("q");
  kyfan::Interval grid = kyfan::default_unit_interval();
  grid.n = static_cast<std::size_t>(state.range(0));
  const kyfan::CheckOptions opts{kyfan::kMarginTolerance, execution};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kyfan::check_ratio_monotone(m, n, grid, opts));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(grid.n));
}

}  // namespace

BENCHMARK_CAPTURE(BM_RatioKyFan, serial, kyfan::Execution::Serial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RatioKyFan, parallel, kyfan::Execution::Parallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RatioMonotone, serial, kyfan::Execution::Serial)->Arg(4000)->Arg(100000);
BENCHMARK_CAPTURE(BM_RatioMonotone, parallel, kyfan::Execution::Parallel)->Arg(4000)->Arg(100000);

BENCHMARK_MAIN();
