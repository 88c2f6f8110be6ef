#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lcmcap/constructions.hpp"
#include "lcmcap/errors.hpp"
#include "lcmcap/primes.hpp"
#include "lcmcap/setfam.hpp"

using namespace lcmcap;

TEST_CASE("greedy bucketing fills blocks to the threshold") {
  const BlockPartition part = greedy_buckets({2, 3, 5, 7, 11, 13}, 1.0);
  REQUIRE(part.blocks.size() == 1);
  CHECK(part.blocks[0] == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(part.sums[0] == Rat(31, 30));
  CHECK(part.leftovers == std::vector<std::uint64_t>{7, 11, 13});
  CHECK(part.cap == Rat(1, 2));
  CHECK(part.threshold == 1.0);

  // every completed block lands in [threshold, threshold + cap)
  CHECK(part.sums[0] >= Rat(1));
  CHECK(part.sums[0] < Rat(1) + part.cap);
}

TEST_CASE("bucketing shortfalls report the achieved count") {
  try {
    greedy_buckets({2, 3, 5, 7, 11, 13}, 1.0, 2);
    FAIL("expected a shortfall");
  } catch (const BucketShortfall& e) {
    CHECK(e.completed == 1);
  }
  CHECK_NOTHROW(greedy_buckets({2, 3, 5, 7, 11, 13}, 1.0, 1));
  CHECK_THROWS_AS(greedy_buckets({2, 3}, 0.0), InvalidInput);
  CHECK_THROWS_AS(greedy_buckets({3, 2}, 1.0), InvalidInput);  // not ascending
}

TEST_CASE("elementary symmetric sums by recurrence and enumeration") {
  const std::vector<Rat> w{Rat(1, 2), Rat(1, 3), Rat(1, 5)};
  CHECK(esym(w, 0) == Rat(1));
  CHECK(esym(w, 1) == Rat(31, 30));
  CHECK(esym(w, 2) == Rat(1, 3));
  CHECK(esym(w, 3) == Rat(1, 30));
  CHECK(esym(w, 4) == Rat(0));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Rat> weights;
    const int n = 1 + static_cast<int>(rng() % 9);
    for (int i = 0; i < n; ++i)
      weights.emplace_back(1, static_cast<unsigned long>(2 + rng() % 30));
    for (int r = 0; r <= n + 1; ++r)
      CHECK(esym(weights, r) == esym_enumerate(weights, r));
  }
}

TEST_CASE("threshold optimum and per-block exponent") {
  CHECK(optimal_B(3) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
  CHECK(ck(3) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(ck(4) == doctest::Approx(2.0 / (std::exp(1.0) * std::sqrt(2.0))).epsilon(1e-12));
  for (int k = 3; k <= 10; ++k) {
    const double B = optimal_B(k);
    CHECK(bucket_exponent(k, B) == doctest::Approx(ck(k)).epsilon(1e-12));
    // the optimum really is a local maximum
    CHECK(bucket_exponent(k, B * 1.01) < ck(k));
    CHECK(bucket_exponent(k, B * 0.99) < ck(k));
  }
}

TEST_CASE("product construction with k = 3 lists one prime per block") {
  const BlockPartition part = greedy_buckets({2, 3, 5, 7, 11, 13}, 1.0);
  const ProductConstructionReport report = thm12_construction(3, part, true);
  CHECK(report.r == 1);
  CHECK(report.block_count == 1);
  CHECK(report.harmonic_sum == Rat(31, 30));
  CHECK(report.element_count == 3.0);
  REQUIRE(report.enumerated);
  REQUIRE(report.elements.size() == 3);
  CHECK(report.elements[0] == 2);
  CHECK(report.elements[2] == 5);
  REQUIRE(report.sum_matches.has_value());
  CHECK(*report.sum_matches);
  CHECK(report.freeness.checked);
  CHECK(report.freeness.free);
}

TEST_CASE("product construction multiplies block polynomials") {
  BlockPartition part;
  part.blocks = {{2, 3, 5}, {7, 11, 13}};
  part.sums = {Rat(31, 30), Rat(311, 1001)};
  part.threshold = 0.3;
  part.cap = Rat(1, 2);
  const ProductConstructionReport report = thm12_construction(4, part, true);
  CHECK(report.r == 2);
  // esym_2(1/2,1/3,1/5) * esym_2(1/7,1/11,1/13) = (1/3) * (31/1001)
  CHECK(report.harmonic_sum == Rat(31, 3003));
  CHECK(report.element_count == 9.0);
  REQUIRE(report.enumerated);
  CHECK(report.elements.size() == 9);
  CHECK(report.elements.front() == 6 * 77);
  REQUIRE(report.sum_matches.has_value());
  CHECK(*report.sum_matches);
  CHECK(report.freeness.checked);
  CHECK(report.freeness.free);
  REQUIRE(report.support.has_value());
  CHECK(report.support->ground_size == 6);
  CHECK(report.support->size() == 9);

  // a block thinner than r is invalid
  BlockPartition thin;
  thin.blocks = {{2, 3, 5}, {7}};
  thin.sums = {Rat(31, 30), Rat(1, 7)};
  thin.threshold = 0.1;
  thin.cap = Rat(1, 2);
  CHECK_THROWS_AS(thm12_construction(4, thin, false), InvalidInput);
}

TEST_CASE("materialization cap: refuse or truncate") {
  BlockPartition part;
  part.blocks = {{2, 3, 5, 7, 11, 13, 17, 19}};
  part.sums = {Rat(0)};
  part.threshold = 0.1;
  part.cap = Rat(1, 2);
  CHECK_THROWS_AS(thm12_construction(4, part, true, 5, false), ResourceLimit);
  const ProductConstructionReport cut = thm12_construction(4, part, true, 5, true);
  CHECK(cut.truncated);
  CHECK(cut.elements.size() == 5);
  CHECK(!cut.sum_matches.has_value());
}

TEST_CASE("family-indexed construction sums products of block sums") {
  const PrimeTable table = PrimeTable::sieve(600);
  const BlockPartition part = greedy_buckets(table.primes, 1.0);
  REQUIRE(part.blocks.size() >= 2);
  const SetFamily family = SetFamily::from_members(2, {0b01, 0b10});
  const FamilyConstructionReport report = thm15_construction(family, 3, part);
  CHECK(report.family_size == 2);
  CHECK(report.harmonic_sum == part.sums[0] + part.sums[1]);
  CHECK(report.lower_bound_ok);

  // sampling is deterministic in the seed
  const FamilyConstructionReport a = thm15_construction(family, 3, part, true, 9);
  const FamilyConstructionReport b = thm15_construction(family, 3, part, true, 9);
  REQUIRE(a.samples.size() == 2);
  CHECK(a.samples == b.samples);
  CHECK(a.seed == 9);
  CHECK(a.freeness.checked);
  CHECK(a.freeness.free);

  // a block sum below 1 voids the lower-bound argument
  BlockPartition weak;
  weak.blocks = {{7, 11}, {13, 17}};
  weak.sums = {Rat(1, 7) + Rat(1, 11), Rat(1, 13) + Rat(1, 17)};
  weak.threshold = 0.2;
  weak.cap = Rat(1, 7);
  CHECK_THROWS_AS(thm15_construction(family, 3, weak), InvalidInput);
}

TEST_CASE("family-indexed construction rejects too few blocks") {
  BlockPartition part;
  part.blocks = {{2, 3, 5}};
  part.sums = {Rat(31, 30)};
  part.threshold = 1.0;
  part.cap = Rat(1, 2);
  const SetFamily family = SetFamily::from_members(2, {0b01, 0b10});
  CHECK_THROWS_AS(thm15_construction(family, 3, part), InvalidInput);
}

TEST_CASE("product measures over weighted ground sets") {
  WeightedGroundSet wgs;
  wgs.weights = {Rat(1, 2), Rat(1, 3)};
  const SetFamily fam = SetFamily::from_members(2, {0b01, 0b10});
  // 1/2 * 2/3 + 1/2 * 1/3
  CHECK(product_measure(fam, wgs) == Rat(1, 2));
  const SetFamily empty_member = SetFamily::from_members(2, {0});
  CHECK(product_measure(empty_member, wgs) == Rat(1, 3));
  const SetFamily none = SetFamily::from_members(2, {});
  CHECK(product_measure(none, wgs) == Rat(0));

  WeightedGroundSet bad;
  bad.weights = {Rat(3, 2)};
  CHECK_THROWS_AS(bad.validate(), InvalidInput);
  CHECK(wgs.total() == Rat(5, 6));
}

TEST_CASE("reciprocal-label sums need labels") {
  const SetFamily fam = SetFamily::from_members(2, {0b01, 0b10, 0b11}, {2, 3});
  // 1/2 + 1/3 + 1/6
  CHECK(family_harmonic_sum(fam) == Rat(1));
  const SetFamily unlabeled = SetFamily::from_members(2, {0b01});
  CHECK_THROWS_AS(family_harmonic_sum(unlabeled), InvalidInput);
}

TEST_CASE("weighted partition scans then prunes to minimality") {
  WeightedGroundSet wgs;
  wgs.weights = {Rat(1, 2), Rat(1, 3), Rat(1, 4), Rat(1, 5), Rat(1, 6)};
  const WeightedPartition part = weighted_partition(wgs, Rat(1, 2));
  REQUIRE(part.blocks.size() == 2);
  CHECK(part.blocks[0] == std::vector<int>{0});
  CHECK(part.blocks[1] == std::vector<int>{1, 2});
  CHECK(part.remainder == std::vector<int>{3, 4});

  // pruning can hand an element back to the pool for a later block
  WeightedGroundSet second;
  second.weights = {Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 2)};
  const WeightedPartition pruned = weighted_partition(second, Rat(1, 2));
  REQUIRE(pruned.blocks.size() == 2);
  CHECK(pruned.blocks[0] == std::vector<int>{0, 1});
  CHECK(pruned.blocks[1] == std::vector<int>{3});
  CHECK(pruned.remainder == std::vector<int>{2});

  CHECK_THROWS_AS(weighted_partition(wgs, Rat(0)), InvalidInput);
  CHECK_THROWS_AS(weighted_partition(wgs, Rat(1)), InvalidInput);
}

TEST_CASE("weighted partition block weights live in the promised band") {
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 60; ++trial) {
    WeightedGroundSet wgs;
    const int n = 1 + static_cast<int>(rng() % 20);
    Rat wmax(0);
    for (int i = 0; i < n; ++i) {
      const Rat w(1, static_cast<unsigned long>(2 + rng() % 12));
      wgs.weights.push_back(w);
      if (w > wmax) wmax = w;
    }
    const Rat c(1, 2 + static_cast<long>(rng() % 4));
    const WeightedPartition part = weighted_partition(wgs, c);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    for (const auto& block : part.blocks) {
      Rat sum(0);
      for (int idx : block) {
        CHECK(!used[static_cast<std::size_t>(idx)]);
        used[static_cast<std::size_t>(idx)] = true;
        sum += wgs.weights[static_cast<std::size_t>(idx)];
      }
      CHECK(sum >= c);
      CHECK(sum < c + wmax);
      // inclusion-minimality: no single element is removable
      for (int idx : block)
        CHECK(sum - wgs.weights[static_cast<std::size_t>(idx)] < c);
    }
    Rat rest(0);
    for (int idx : part.remainder) {
      CHECK(!used[static_cast<std::size_t>(idx)]);
      used[static_cast<std::size_t>(idx)] = true;
      rest += wgs.weights[static_cast<std::size_t>(idx)];
    }
    CHECK(rest <= c);
    for (bool u : used) CHECK(u);
  }
}

TEST_CASE("weighted pipeline cross-checks all identities") {
  WeightedGroundSet wgs;
  wgs.labels = {2, 3};
  wgs.weights = {Rat(1, 3), Rat(1, 4)};
  const SetFamily base = SetFamily::from_members(2, {0b01});
  const WeightedPipelineReport report =
      weighted_cosunflower_pipeline(wgs, Rat(1, 4), base, 3);
  REQUIRE(report.partition.blocks.size() == 2);
  CHECK(report.family.members == std::vector<std::uint64_t>{0b01});
  CHECK(report.measure == Rat(1, 4));
  CHECK(report.block_none == std::vector<Rat>{Rat(2, 3), Rat(3, 4)});
  CHECK(report.block_one == std::vector<Rat>{Rat(1, 3), Rat(1, 4)});
  CHECK(report.remainder_none == Rat(1));
  CHECK(report.measure_identity_ok);
  CHECK(report.ratio_identity_ok);
  REQUIRE(report.harmonic_identity_ok.has_value());
  CHECK(*report.harmonic_identity_ok);
  CHECK(report.harmonic_sum == Rat(1, 2));
  CHECK(report.freeness.checked);
  CHECK(report.freeness.free);
}

TEST_CASE("weighted pipeline on a larger prime set") {
  WeightedGroundSet wgs;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29}) {
    wgs.labels.push_back(p);
    wgs.weights.emplace_back(1, static_cast<unsigned long>(p + 1));
  }
  const Rat c(1, 4);
  const WeightedPartition part = weighted_partition(wgs, c);
  REQUIRE(part.blocks.size() >= 2);
  const int t = static_cast<int>(part.blocks.size());
  std::vector<std::uint64_t> members;
  for (int i = 0; i < t; ++i) members.push_back(std::uint64_t{1} << i);
  const SetFamily base = SetFamily::from_members(t, members);
  const WeightedPipelineReport report =
      weighted_cosunflower_pipeline(wgs, c, base, 3);
  CHECK(report.measure_identity_ok);
  CHECK(report.ratio_identity_ok);
  REQUIRE(report.harmonic_identity_ok.has_value());
  CHECK(*report.harmonic_identity_ok);
  CHECK(report.freeness.checked);
  CHECK(report.freeness.free);
  // singleton base members blow up to one member per block element
  std::size_t in_blocks = 0;
  for (const auto& block : report.partition.blocks) in_blocks += block.size();
  CHECK(report.family.size() == in_blocks);
}

TEST_CASE("tail majorant dominates the exact tail") {
  const PrimeTable table = PrimeTable::sieve(100);
  const TailBound bound = tail_harmonic_bound(table, {2, 3, 5}, 5);
  REQUIRE(bound.exact_checked);
  // subsets with product > 5: {2,3}, {2,5}, {3,5}, {2,3,5}
  CHECK(bound.exact_tail == Rat(11, 30));
  CHECK(bound.within);
  CHECK(bound.majorant >= rat_double(Rat(11, 30)));

  CHECK_THROWS_AS(tail_harmonic_bound(table, {4, 5}, 10), InvalidInput);
  CHECK_THROWS_AS(tail_harmonic_bound(table, {2, 3}, 2), InvalidInput);

  // the closed-form supersum shortcut agrees with brute force elsewhere
  const TailBound wide = tail_harmonic_bound(table, {2, 3, 5, 7, 11, 13}, 30);
  REQUIRE(wide.exact_checked);
  Rat brute(0);
  const std::vector<std::uint64_t> P{2, 3, 5, 7, 11, 13};
  for (unsigned mask = 1; mask < 64; ++mask) {
    unsigned long prod = 1;
    for (int i = 0; i < 6; ++i)
      if (mask >> i & 1) prod *= static_cast<unsigned long>(P[static_cast<std::size_t>(i)]);
    if (prod > 30) brute += Rat(1, prod);
  }
  CHECK(wide.exact_tail == brute);
  CHECK(wide.within);
}

TEST_CASE("size-driven parameter regimes") {
  const NDrivenParams p12 = thm12_params(1e300, 3);
  CHECK(p12.L == doctest::Approx(std::log(std::log(1e300))).epsilon(1e-12));
  CHECK(p12.delta == doctest::Approx(1.0 / std::sqrt(p12.L)).epsilon(1e-12));
  CHECK(p12.t >= 1);
  CHECK(p12.y == doctest::Approx(std::exp(std::cbrt(p12.L))).epsilon(1e-12));
  CHECK(p12.x > p12.y);

  const NDrivenParams p15 = thm15_params(1e20);
  CHECK(p15.t == 1);
  CHECK(p15.delta == doctest::Approx(1.0 / p15.L).epsilon(1e-12));
  CHECK(p15.y == doctest::Approx(p15.L * p15.L).epsilon(1e-12));

  CHECK_THROWS_AS(thm12_params(10, 3), InvalidInput);
  CHECK_THROWS_AS(thm15_params(10), InvalidInput);
}
