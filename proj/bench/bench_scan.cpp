#include <benchmark/benchmark.h>

#include <omp.h>

#include "sixj/harness.hpp"

namespace {

const sixj::SpinSextuple kRegular = sixj::SpinSextuple::from_twice({2, 2, 2, 2, 2, 2});
const sixj::SpinSextuple kAllHalf = sixj::SpinSextuple::from_twice({1, 1, 1, 1, 1, 1});

void BM_ScanSu2Serial(benchmark::State& state) {
  const auto ks = sixj::k_range(10, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sixj::scan_serial(kRegular, sixj::ScanKind::su2, ks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ks.size()));
}

void BM_ScanSu2Parallel(benchmark::State& state) {
  const auto ks = sixj::k_range(10, state.range(0), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sixj::scan(kRegular, sixj::ScanKind::su2, ks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ks.size()));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_ScanSuperSerial(benchmark::State& state) {
  const auto ks = sixj::k_range(21, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sixj::scan_serial(kAllHalf, sixj::ScanKind::super, ks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ks.size()));
}

void BM_ScanSuperParallel(benchmark::State& state) {
  const auto ks = sixj::k_range(21, state.range(0), 2);
  for (auto _ : state) benchmark::DoNotOptimize(sixj::scan(kAllHalf, sixj::ScanKind::super, ks));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ks.size()));
  state.counters["threads"] = omp_get_max_threads();
}

}  // namespace

BENCHMARK(BM_ScanSu2Serial)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSu2Parallel)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSuperSerial)->Arg(151)->Arg(301)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ScanSuperParallel)->Arg(151)->Arg(301)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
