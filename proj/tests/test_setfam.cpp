#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "lcmcap/errors.hpp"
#include "lcmcap/setfam.hpp"

using namespace lcmcap;

namespace {

SetFamily random_family(std::mt19937_64& rng, int ground, std::size_t want) {
  std::vector<std::uint64_t> members;
  const std::uint64_t full =
      ground == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground) - 1;
  while (members.size() < want) {
    const std::uint64_t m = rng() & full;
    if (std::find(members.begin(), members.end(), m) == members.end())
      members.push_back(m);
  }
  return SetFamily::from_members(ground, std::move(members));
}

}  // namespace

TEST_CASE("from_members canonicalizes and validates") {
  SetFamily fam = SetFamily::from_members(3, {5, 1, 6});
  CHECK(fam.members == std::vector<std::uint64_t>{1, 5, 6});
  CHECK(fam.size() == 3);
  CHECK(fam.full_mask() == 7);
  CHECK_THROWS_AS(SetFamily::from_members(3, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(SetFamily::from_members(2, {4}), InvalidInput);
  CHECK_THROWS_AS(SetFamily::from_members(65, {}), InvalidInput);
  CHECK_THROWS_AS(SetFamily::from_members(2, {1}, {2, 3, 5}), InvalidInput);
}

TEST_CASE("pairwise union and intersection predicates") {
  // all 2-subsets of {0,1,2}: unions pairwise equal 0b111, intersections differ
  const std::vector<std::uint64_t> triangle{0b011, 0b101, 0b110};
  CHECK(pairwise_unions_constant(triangle));
  CHECK(!pairwise_intersections_constant(triangle));

  // a sunflower with kernel {0}: intersections constant, unions not
  const std::vector<std::uint64_t> star{0b0011, 0b0101, 0b1001};
  CHECK(pairwise_intersections_constant(star));
  CHECK(!pairwise_unions_constant(star));

  CHECK(is_sunflower(star));
  CHECK(!is_sunflower(triangle));
  CHECK(is_cosunflower(triangle));
  CHECK(!is_cosunflower(star));

  // disjoint sets form a sunflower with empty kernel
  CHECK(is_sunflower(std::vector<std::uint64_t>{1, 2, 4}));
  // duplicates are invalid input for the sunflower predicates
  CHECK_THROWS_AS(is_sunflower(std::vector<std::uint64_t>{1, 1, 2}), InvalidInput);
}

TEST_CASE("zero_or_many_check matches constant pairwise unions") {
  // exhaustive over all 3- and 4-tuples (with repetition) on 3 ground elements
  for (int k = 3; k <= 4; ++k) {
    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(k));
    std::vector<int> idx(static_cast<std::size_t>(k), 0);
    bool all_agree = true;
    while (true) {
      for (int i = 0; i < k; ++i) tuple[static_cast<std::size_t>(i)] =
          static_cast<std::uint64_t>(idx[static_cast<std::size_t>(i)]);
      if (pairwise_unions_constant(tuple) != zero_or_many_check(tuple, 3, k))
        all_agree = false;
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == 7) {
        idx[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
    }
    CHECK(all_agree);
  }
}

TEST_CASE("triangle family contains a 3-cosunflower and no 3-sunflower") {
  const SetFamily fam = SetFamily::from_members(3, {0b011, 0b101, 0b110});
  const auto co = find_k_cosunflower(fam, 3);
  REQUIRE(co.has_value());
  CHECK(*co == std::vector<int>{0, 1, 2});
  CHECK(!find_k_sunflower(fam, 3).has_value());
}

TEST_CASE("witnesses are lexicographically smallest") {
  // two disjoint triples of singletons; {0,1,2} and {3,4,5} are both
  // 3-sunflowers (empty kernel); lex-min must pick {0,1,2}
  const SetFamily fam =
      SetFamily::from_members(6, {1, 2, 4, 8, 16, 32});
  const auto sf = find_k_sunflower(fam, 3);
  REQUIRE(sf.has_value());
  CHECK(*sf == std::vector<int>{0, 1, 2});
}

TEST_CASE("fast detectors agree with the enumeration oracles") {
  std::mt19937_64 rng(20250819);
  for (int trial = 0; trial < 300; ++trial) {
    const int ground = 3 + static_cast<int>(rng() % 8);
    const std::size_t max_members = std::uint64_t{1} << ground;
    const std::size_t want = 2 + rng() % std::min<std::size_t>(max_members - 1, 12);
    const SetFamily fam = random_family(rng, ground, want);
    for (int k = 3; k <= 4; ++k) {
      const auto fast_s = find_k_sunflower(fam, k);
      const auto slow_s = find_k_sunflower_enum(fam, k);
      CHECK(fast_s == slow_s);
      const auto fast_c = find_k_cosunflower(fam, k);
      const auto direct_c = find_k_cosunflower_direct(fam, k);
      const auto slow_c = find_k_cosunflower_enum(fam, k);
      CHECK(fast_c == slow_c);
      CHECK(direct_c == slow_c);
    }
  }
}

TEST_CASE("complement duality swaps sunflowers and cosunflowers") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int ground = 3 + static_cast<int>(rng() % 7);
    const std::size_t cap = std::size_t{1} << ground;  // distinct subsets available
    const SetFamily fam =
        random_family(rng, ground, std::min<std::size_t>(3 + rng() % 9, cap));
    const SetFamily comp = complement_family(fam);
    CHECK(find_k_sunflower(fam, 3).has_value() ==
          find_k_cosunflower(comp, 3).has_value());
    CHECK(find_k_cosunflower(fam, 3).has_value() ==
          find_k_sunflower(comp, 3).has_value());
  }
}

TEST_CASE("raw-mask searches honor caller order") {
  const std::vector<std::uint64_t> sets{0b110, 0b101, 0b011};
  const auto hit = find_k_equal_unions(sets, 3);
  REQUIRE(hit.has_value());
  CHECK(*hit == std::vector<int>{0, 1, 2});
  CHECK(!find_k_equal_intersections(sets, 3).has_value());
}

TEST_CASE("blocks validate coverage and disjointness") {
  Blocks ok;
  ok.ground_size = 4;
  ok.blocks = {0b0011, 0b0100};
  ok.remainder = 0b1000;
  CHECK_NOTHROW(ok.validate());

  Blocks overlap = ok;
  overlap.blocks = {0b0011, 0b0110};
  overlap.remainder = 0b1000;
  CHECK_THROWS_AS(overlap.validate(), InvalidInput);

  Blocks gap = ok;
  gap.remainder = 0;
  CHECK_THROWS_AS(gap.validate(), InvalidInput);
}

TEST_CASE("blow_up picks one element per selected block") {
  // base on 2 block indices; U_0 = {0,1}, U_1 = {2}
  const SetFamily base = SetFamily::from_members(2, {0b01, 0b10, 0b11});
  Blocks blocks;
  blocks.ground_size = 3;
  blocks.blocks = {0b011, 0b100};
  blocks.remainder = 0;
  const SetFamily big = blow_up(base, blocks);
  // {0},{1} from member {block0}; {2} from {block1}; {0,2},{1,2} from both
  CHECK(big.members == std::vector<std::uint64_t>{0b001, 0b010, 0b100, 0b101, 0b110});
}

TEST_CASE("blow_up size is the product formula") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const int t = 1 + static_cast<int>(rng() % 3);
    Blocks blocks;
    std::vector<int> sizes;
    int base_bit = 0;
    for (int i = 0; i < t; ++i) {
      const int s = 1 + static_cast<int>(rng() % 3);
      sizes.push_back(s);
      std::uint64_t mask = 0;
      for (int b = 0; b < s; ++b) mask |= std::uint64_t{1} << (base_bit + b);
      blocks.blocks.push_back(mask);
      base_bit += s;
    }
    blocks.ground_size = base_bit;
    blocks.remainder = 0;
    const SetFamily base = random_family(rng, t, 1 + rng() % (1u << t));
    const SetFamily big = blow_up(base, blocks);
    std::size_t expect = 0;
    for (std::uint64_t member : base.members) {
      std::size_t ways = 1;
      for (int i = 0; i < t; ++i)
        if (member >> i & 1) ways *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]);
      expect += ways;
    }
    CHECK(big.size() == expect);
  }
}

TEST_CASE("blow_up rejects a member over an empty block") {
  const SetFamily base = SetFamily::from_members(2, {0b10});
  Blocks blocks;
  blocks.ground_size = 2;
  blocks.blocks = {0b11, 0};
  blocks.remainder = 0;
  CHECK_THROWS_AS(blow_up(base, blocks), InvalidInput);
}

TEST_CASE("tensor_power multiplies the uniform layer") {
  const SetFamily fam = SetFamily::from_members(3, {0b011, 0b101, 0b110});
  const SetFamily squared = tensor_power(fam, 2, 3);
  CHECK(squared.ground_size == 6);
  CHECK(squared.size() == 9);
  CHECK(!find_k_sunflower(squared, 3).has_value());
}
