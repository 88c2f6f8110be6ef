#include <benchmark/benchmark.h>

#include "lcmcap/primes.hpp"

namespace {

void BM_Sieve(benchmark::State& state) {
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    lcmcap::PrimeTable table = lcmcap::PrimeTable::sieve(limit);
    benchmark::DoNotOptimize(table.primes.size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_Sieve)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000);

void BM_PrimeHarmonicExact(benchmark::State& state) {
  const auto hi = static_cast<std::uint64_t>(state.range(0));
  const lcmcap::PrimeTable table = lcmcap::PrimeTable::sieve(hi);
  for (auto _ : state) {
    lcmcap::Rat sum = lcmcap::prime_harmonic_sum_exact(table, 1, hi);
    benchmark::DoNotOptimize(sum);
  }
}
BENCHMARK(BM_PrimeHarmonicExact)->Arg(1'000)->Arg(10'000);

}  // namespace

BENCHMARK_MAIN();
