#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lcmcap/errors.hpp"
#include "lcmcap/lcmfree.hpp"
#include "lcmcap/primes.hpp"

using namespace lcmcap;

namespace {

const PrimeTable& table100() {
  static const PrimeTable table = PrimeTable::sieve(100);
  return table;
}

}  // namespace

TEST_CASE("instances factor their elements") {
  const LcmInstance inst =
      LcmInstance::from_elements({12, 6, 35}, table100());
  CHECK(inst.elements == std::vector<std::uint64_t>{6, 12, 35});
  REQUIRE(inst.factorizations.size() == 3);
  CHECK(inst.factorizations[1] ==
        std::vector<std::pair<std::uint64_t, int>>{{2, 2}, {3, 1}});
  CHECK(inst.occurring_primes == std::vector<std::uint64_t>{2, 3, 5, 7});
  // supports over {2,3,5,7}: 6 -> 0b0011, 12 -> 0b0011, 35 -> 0b1100
  CHECK(inst.support_masks == std::vector<std::uint64_t>{0b0011, 0b0011, 0b1100});
  CHECK(inst.contains(12));
  CHECK(!inst.contains(13));
  CHECK(!inst.all_squarefree());
  CHECK(LcmInstance::from_elements({6, 35}, table100()).all_squarefree());
}

TEST_CASE("instances certify prime cofactors past the table") {
  // 9973 is prime and beyond the table; 200^2 >= 19946 lets trial division
  // certify the cofactor left after dividing out 2
  const PrimeTable table = PrimeTable::sieve(200);
  const LcmInstance inst = LcmInstance::from_elements({2 * 9973}, table);
  CHECK(inst.factorizations[0] ==
        std::vector<std::pair<std::uint64_t, int>>{{2, 1}, {9973, 1}});
  CHECK_THROWS_AS(LcmInstance::from_elements({10'001 * 10'003}, table100()),
                  OutOfRangeError);
  CHECK_THROWS_AS(LcmInstance::from_elements({4, 4}, table100()), InvalidInput);
  CHECK_THROWS_AS(LcmInstance::from_elements({0}, table100()), InvalidInput);
}

TEST_CASE("classic equal-lcm triples are found in order") {
  const LcmInstance inst =
      LcmInstance::from_elements({6, 10, 15, 7}, table100());
  const auto tuple = find_lcm_k_tuple(inst, 3);
  REQUIRE(tuple.has_value());
  CHECK(*tuple == std::vector<std::uint64_t>{6, 10, 15});
  CHECK(find_lcm_k_tuple(inst, 4) == std::nullopt);
  CHECK(!is_lcm_k_free(inst, 3));
  CHECK(is_lcm_k_free(inst, 4));

  const LcmInstance free_inst =
      LcmInstance::from_elements({1, 2, 3, 4, 5}, table100());
  CHECK(is_lcm_k_free(free_inst, 3));
}

TEST_CASE("divisor-chain tuples count too") {
  // lcm(2,6)=lcm(3,6)=lcm(2,3)=6
  const LcmInstance inst = LcmInstance::from_elements({2, 3, 6}, table100());
  const auto tuple = find_lcm_k_tuple(inst, 3);
  REQUIRE(tuple.has_value());
  CHECK(*tuple == std::vector<std::uint64_t>{2, 3, 6});
}

TEST_CASE("fast tuple search agrees with the naive oracle") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = 1; v <= 60; ++v)
      if (rng() % 3 == 0) pool.push_back(v);
    if (pool.size() < 4) continue;
    const LcmInstance inst = LcmInstance::from_elements(pool, table100());
    for (int k = 3; k <= 4; ++k)
      CHECK(find_lcm_k_tuple(inst, k) == find_lcm_k_tuple_naive(inst, k));
  }
}

TEST_CASE("maximum reciprocal sums over LCM-3-free subsets") {
  const std::vector<Rat> frozen{
      Rat(1),            Rat(3, 2),         Rat(11, 6),        Rat(25, 12),
      Rat(137, 60),      Rat(137, 60),      Rat(1019, 420),    Rat(2143, 840),
      Rat(6709, 2520),   Rat(6709, 2520),   Rat(76319, 27720), Rat(76319, 27720),
      Rat(1019867, 360360), Rat(1019867, 360360), Rat(1019867, 360360),
      Rat(2084779, 720720),
  };
  for (std::uint64_t N = 1; N <= 16; ++N) {
    const FkResult result = exact_fk(N, 3);
    CHECK(result.exact);
    CHECK(result.value == frozen[N - 1]);
  }

  // lexicographically smallest optimal sets at a few checkpoints
  CHECK(exact_fk(5, 3).optimal_set == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(exact_fk(6, 3).optimal_set == std::vector<std::uint64_t>{1, 2, 3, 4, 5});
  CHECK(exact_fk(9, 3).optimal_set ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 5, 7, 8, 9});
  CHECK(exact_fk(16, 3).optimal_set ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
}

TEST_CASE("solver guardrails") {
  CHECK_THROWS_AS(exact_fk(5, 2), InvalidInput);
  CHECK_THROWS_AS(exact_fk(0, 3), InvalidInput);
  CHECK_THROWS_AS(exact_fk(61, 3), OutOfRangeError);
  const FkResult starved = exact_fk(12, 3, 5);
  CHECK(!starved.exact);
  CHECK(starved.value <= Rat(76319, 27720));
}

TEST_CASE("representation families over the divisor structure") {
  const LcmInstance inst = LcmInstance::from_elements({2, 3}, table100());
  const SetFamily fam = representation_family(6, inst, 1);
  CHECK(fam.ground_size == 2);
  CHECK(fam.labels == std::vector<std::uint64_t>{2, 3});
  // S = {2}: 6/2 = 3 in A; S = {3}: 6/3 = 2 in A
  CHECK(fam.members == std::vector<std::uint64_t>{0b01, 0b10});
  CHECK(representation_count(6, inst, 1) == 2);

  const LcmInstance inst2 = LcmInstance::from_elements({6, 10, 15}, table100());
  const SetFamily fam2 = representation_family(30, inst2, 1);
  CHECK(fam2.size() == 3);  // 30/2=15, 30/3=10, 30/5=6 all present
  CHECK(representation_count(30, inst2, 2) == 0);
  CHECK(representation_count(4, inst2, 1) == 0);
}

TEST_CASE("support families require squarefree instances") {
  const LcmInstance inst = LcmInstance::from_elements({6, 10, 15}, table100());
  const SetFamily fam = support_family(inst);
  CHECK(fam.ground_size == 3);
  CHECK(fam.labels == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(fam.members == std::vector<std::uint64_t>{0b011, 0b101, 0b110});

  const LcmInstance bad = LcmInstance::from_elements({4}, table100());
  CHECK_THROWS_AS(support_family(bad), InvalidInput);
}

TEST_CASE("support unions mirror lcm tuples on squarefree sets") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::uint64_t> pool;
    for (std::uint64_t v = 2; v <= 70; ++v) {
      bool squarefree = true;
      for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % (d * d) == 0) squarefree = false;
      if (squarefree && rng() % 2 == 0) pool.push_back(v);
    }
    if (pool.size() < 4) continue;
    const LcmInstance inst = LcmInstance::from_elements(pool, table100());
    // support_masks stays in element order, unlike a canonicalized family
    const auto by_lcm = find_lcm_k_tuple(inst, 3);
    const auto by_union = find_k_equal_unions(inst.support_masks, 3);
    CHECK(by_lcm.has_value() == by_union.has_value());
    if (by_lcm && by_union) {
      std::vector<std::uint64_t> mapped;
      for (int idx : *by_union) mapped.push_back(inst.elements[static_cast<std::size_t>(idx)]);
      CHECK(mapped == *by_lcm);
    }
  }
}
