// Serial reference vs the incremental OpenMP torsion enumeration.

#include "sphpi/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using sphpi::IntMatrix;

// Four functionals on Z^4 with elementary divisors 1, 2, 6, 0.
const IntMatrix kFunctionals{
    {2, 4, 0, 6}, {0, 6, 12, 0}, {1, 3, 5, -1}, {3, 9, 15, -3}};

void BM_EnumerateSerial(benchmark::State &state) {
  const auto n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sphpi::enumerate_torsion_serial(kFunctionals, n));
  state.SetItemsProcessed(state.iterations() * n * n * n * n);
}

void BM_EnumerateParallel(benchmark::State &state) {
  const auto n = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(sphpi::enumerate_torsion(kFunctionals, n));
  state.SetItemsProcessed(state.iterations() * n * n * n * n);
}

} // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(6)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(6)->Arg(12)->Arg(24)->Arg(48)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
