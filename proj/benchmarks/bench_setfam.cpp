#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "lcmcap/setfam.hpp"

namespace {

lcmcap::SetFamily random_family(int ground, std::size_t size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t mask =
      ground == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
  std::vector<std::uint64_t> members;
  while (members.size() < size) {
    members.push_back(rng() & mask);
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
  }
  return lcmcap::SetFamily::from_members(ground, members);
}

void BM_FindSunflower(benchmark::State& state) {
  const auto fam = random_family(32, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto hit = lcmcap::find_k_sunflower(fam, 3);
    benchmark::DoNotOptimize(hit);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          state.range(0));
}
BENCHMARK(BM_FindSunflower)->Arg(64)->Arg(256)->Arg(1024);

void BM_FindCosunflower(benchmark::State& state) {
  const auto fam = random_family(32, static_cast<std::size_t>(state.range(0)), 8);
  for (auto _ : state) {
    auto hit = lcmcap::find_k_cosunflower(fam, 3);
    benchmark::DoNotOptimize(hit);
  }
}
BENCHMARK(BM_FindCosunflower)->Arg(64)->Arg(256)->Arg(1024);

void BM_FindSunflowerEnum(benchmark::State& state) {
  const auto fam = random_family(32, static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    auto hit = lcmcap::find_k_sunflower_enum(fam, 3);
    benchmark::DoNotOptimize(hit);
  }
}
BENCHMARK(BM_FindSunflowerEnum)->Arg(64)->Arg(128);

}  // namespace
