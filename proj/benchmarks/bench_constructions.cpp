#include <benchmark/benchmark.h>

#include <vector>

#include "lcmcap/constructions.hpp"
#include "lcmcap/primes.hpp"
#include "lcmcap/rat.hpp"

namespace {

void BM_EsymRecurrence(benchmark::State& state) {
  const lcmcap::PrimeTable table =
      lcmcap::PrimeTable::sieve(static_cast<std::uint64_t>(state.range(0)));
  std::vector<lcmcap::Rat> weights;
  weights.reserve(table.primes.size());
  for (std::uint64_t p : table.primes)
    weights.emplace_back(1, static_cast<unsigned long>(p));
  for (auto _ : state) {
    lcmcap::Rat e2 = lcmcap::esym(weights, 2);
    benchmark::DoNotOptimize(e2);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(weights.size()));
}
BENCHMARK(BM_EsymRecurrence)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_GreedyBuckets(benchmark::State& state) {
  const lcmcap::PrimeTable table =
      lcmcap::PrimeTable::sieve(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    lcmcap::BlockPartition part = lcmcap::greedy_buckets(table.primes, 1.0);
    benchmark::DoNotOptimize(part.blocks.size());
  }
}
BENCHMARK(BM_GreedyBuckets)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

void BM_TailHarmonicBound(benchmark::State& state) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  const lcmcap::PrimeTable table = lcmcap::PrimeTable::sieve(100);
  for (auto _ : state) {
    auto bound = lcmcap::tail_harmonic_bound(
        table, primes, static_cast<std::uint64_t>(state.range(0)));
    benchmark::DoNotOptimize(bound);
  }
}
BENCHMARK(BM_TailHarmonicBound)->Arg(1'000)->Arg(100'000);

}  // namespace
