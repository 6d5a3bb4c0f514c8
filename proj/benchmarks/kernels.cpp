// SPDX-License-Identifier: Apache-2.0
// Microbenchmarks for the enumeration oracle: the parallel front kernel
// against its single-threaded reference, plus the hypervolume sweep.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "mobb/instances.hpp"
#include "mobb/oracle.hpp"

namespace {

mobb::MoilpInstance knapsack_fixture(int n) {
  return mobb::generate(mobb::knapsack_spec(3, n, 42));
}

void BM_BruteForceFrontParallel(benchmark::State& state) {
  const auto instance = knapsack_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto front = mobb::brute_force_front(instance);
    benchmark::DoNotOptimize(front);
  }
}
BENCHMARK(BM_BruteForceFrontParallel)->Arg(12)->Arg(16)->Arg(18);

void BM_BruteForceFrontSerial(benchmark::State& state) {
  const auto instance = knapsack_fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto front = mobb::brute_force_front_serial(instance);
    benchmark::DoNotOptimize(front);
  }
}
BENCHMARK(BM_BruteForceFrontSerial)->Arg(12)->Arg(16)->Arg(18);

void BM_Hypervolume3d(benchmark::State& state) {
  const auto instance = knapsack_fixture(16);
  const auto front = mobb::brute_force_front_serial(instance);
  std::vector<std::int64_t> reference(3, 1);
  for (auto _ : state) {
    double volume = mobb::hypervolume(front.images, reference);
    benchmark::DoNotOptimize(volume);
  }
}
BENCHMARK(BM_Hypervolume3d);

}  // namespace

BENCHMARK_MAIN();
