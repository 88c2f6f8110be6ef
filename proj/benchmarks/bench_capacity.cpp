#include <benchmark/benchmark.h>

#include "lcmcap/capacity.hpp"
#include "lcmcap/lcmfree.hpp"

namespace {

void BM_MaxSunflowerFree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    lcmcap::CapacityResult result = lcmcap::max_sunflower_free(n, 3);
    benchmark::DoNotOptimize(result.F);
  }
}
BENCHMARK(BM_MaxSunflowerFree)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ExactFk(benchmark::State& state) {
  const auto N = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    lcmcap::FkResult result = lcmcap::exact_fk(N, 3);
    benchmark::DoNotOptimize(result.nodes);
  }
}
BENCHMARK(BM_ExactFk)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
