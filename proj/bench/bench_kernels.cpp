// Serial reference kernels vs their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "kset/oracle.hpp"
#include "kset/sim.hpp"

namespace {

const kset::FieldSpec kForest{100.0, 100.0, 30.0};

void BM_CoverageSerial(benchmark::State& state) {
  const kset::sim::SimConfig cfg{32, 50, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kset::sim::estimate_network_coverage_serial(kForest, state.range(0), 4, cfg));
  }
}
BENCHMARK(BM_CoverageSerial)->Arg(50)->Arg(200)->Arg(1606)->Unit(benchmark::kMillisecond);

void BM_CoverageParallel(benchmark::State& state) {
  const kset::sim::SimConfig cfg{32, 50, 0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kset::sim::estimate_network_coverage(kForest, state.range(0), 4, cfg));
  }
}
BENCHMARK(BM_CoverageParallel)->Arg(50)->Arg(200)->Arg(1606)->Unit(benchmark::kMillisecond);

void BM_EnumerationSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kset::oracle::enumerate_point_coverage_serial(state.range(0), 4));
}
BENCHMARK(BM_EnumerationSerial)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

void BM_EnumerationParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(kset::oracle::enumerate_point_coverage(state.range(0), 4));
}
BENCHMARK(BM_EnumerationParallel)->Arg(8)->Arg(11)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
