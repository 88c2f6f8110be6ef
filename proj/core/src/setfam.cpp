#include "lcmcap/setfam.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "lcmcap/errors.hpp"
#include "pair_search.hpp"

namespace lcmcap {

SetFamily SetFamily::from_members(int ground_size, std::vector<std::uint64_t> members,
                                  std::vector<std::uint64_t> labels) {
  if (ground_size < 0 || ground_size > 64)
    throw InvalidInput("ground size must be in [0, 64], got " +
                       std::to_string(ground_size));
  if (!labels.empty() && static_cast<int>(labels.size()) != ground_size)
    throw InvalidInput("labels length " + std::to_string(labels.size()) +
                       " != ground size " + std::to_string(ground_size));
  SetFamily fam;
  fam.ground_size = ground_size;
  fam.labels = std::move(labels);
  std::uint64_t full = fam.full_mask();
  for (std::uint64_t m : members)
    if (m & ~full)
      throw InvalidInput("member uses elements outside the ground set");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw InvalidInput("duplicate members in set family");
  fam.members = std::move(members);
  return fam;
}

bool pairwise_intersections_constant(std::span<const std::uint64_t> sets) {
  if (sets.size() < 2) return true;
  std::uint64_t common = sets[0] & sets[1];
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] & sets[j]) != common) return false;
  return true;
}

bool pairwise_unions_constant(std::span<const std::uint64_t> sets) {
  if (sets.size() < 2) return true;
  std::uint64_t common = sets[0] | sets[1];
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if ((sets[i] | sets[j]) != common) return false;
  return true;
}

namespace {

void require_distinct(std::span<const std::uint64_t> sets) {
  std::vector<std::uint64_t> copy(sets.begin(), sets.end());
  std::sort(copy.begin(), copy.end());
  if (std::adjacent_find(copy.begin(), copy.end()) != copy.end())
    throw InvalidInput("duplicate sets in sunflower check");
}

}  // namespace

bool is_sunflower(std::span<const std::uint64_t> sets) {
  if (sets.size() < 2) throw InvalidInput("sunflower check needs at least 2 sets");
  require_distinct(sets);
  return pairwise_intersections_constant(sets);
}

bool is_cosunflower(std::span<const std::uint64_t> sets) {
  if (sets.size() < 2) throw InvalidInput("cosunflower check needs at least 2 sets");
  require_distinct(sets);
  return pairwise_unions_constant(sets);
}

bool zero_or_many_check(std::span<const std::uint64_t> sets, int ground_size, int k) {
  if (k < 2) throw InvalidInput("zero_or_many_check needs k >= 2");
  if (sets.size() != static_cast<std::size_t>(k))
    throw InvalidInput("zero_or_many_check expects exactly k sets");
  for (int bit = 0; bit < ground_size; ++bit) {
    int count = 0;
    for (std::uint64_t s : sets) count += static_cast<int>((s >> bit) & 1);
    if (count != 0 && count < k - 1) return false;
  }
  return true;
}

namespace {

auto mask_and(std::span<const std::uint64_t> sets) {
  return [sets](int a, int b) { return sets[a] & sets[b]; };
}

auto mask_or(std::span<const std::uint64_t> sets) {
  return [sets](int a, int b) { return sets[a] | sets[b]; };
}

std::vector<std::uint64_t> complemented_masks(const SetFamily& family) {
  std::vector<std::uint64_t> out = family.members;
  std::uint64_t full = family.full_mask();
  for (auto& m : out) m = full & ~m;
  return out;
}

}  // namespace

std::optional<std::vector<int>> find_k_equal_intersections(
    std::span<const std::uint64_t> sets, int k) {
  return detail::find_k_equal_pairs<std::uint64_t>(static_cast<int>(sets.size()), k,
                                                   mask_and(sets));
}

std::optional<std::vector<int>> find_k_equal_unions(std::span<const std::uint64_t> sets,
                                                    int k) {
  return detail::find_k_equal_pairs<std::uint64_t>(static_cast<int>(sets.size()), k,
                                                   mask_or(sets));
}

std::optional<std::vector<int>> find_k_sunflower(const SetFamily& family, int k) {
  return find_k_equal_intersections(family.members, k);
}

std::optional<std::vector<int>> find_k_sunflower_enum(const SetFamily& family, int k) {
  std::span<const std::uint64_t> sets(family.members);
  return detail::find_k_equal_enum<std::uint64_t>(static_cast<int>(sets.size()), k,
                                                  mask_and(sets));
}

// Cosunflowers are found through complement duality: unions of members turn
// into intersections of their complements, and indices are preserved because
// the complemented list keeps the original member order.
std::optional<std::vector<int>> find_k_cosunflower(const SetFamily& family, int k) {
  auto comp = complemented_masks(family);
  return find_k_equal_intersections(comp, k);
}

std::optional<std::vector<int>> find_k_cosunflower_direct(const SetFamily& family,
                                                          int k) {
  return find_k_equal_unions(family.members, k);
}

std::optional<std::vector<int>> find_k_cosunflower_enum(const SetFamily& family, int k) {
  std::span<const std::uint64_t> sets(family.members);
  return detail::find_k_equal_enum<std::uint64_t>(static_cast<int>(sets.size()), k,
                                                  mask_or(sets));
}

SetFamily complement_family(const SetFamily& family) {
  return SetFamily::from_members(family.ground_size, complemented_masks(family),
                                 family.labels);
}

void Blocks::validate() const {
  if (ground_size < 0 || ground_size > 64)
    throw InvalidInput("blocks ground size must be in [0, 64]");
  std::uint64_t full = ground_size == 64 ? ~std::uint64_t{0}
                                         : (std::uint64_t{1} << ground_size) - 1;
  std::uint64_t seen = remainder;
  if (remainder & ~full) throw InvalidInput("remainder block leaves the ground set");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i] & ~full) throw InvalidInput("block leaves the ground set");
    if (blocks[i] & seen) throw InvalidInput("blocks are not pairwise disjoint");
    seen |= blocks[i];
  }
  if (seen != full) throw InvalidInput("blocks plus remainder do not cover the ground set");
}

SetFamily blow_up(const SetFamily& base, const Blocks& blocks, std::size_t member_cap) {
  blocks.validate();
  if (static_cast<int>(blocks.blocks.size()) != base.ground_size)
    throw InvalidInput("blow-up needs exactly one block per base ground element (" +
                       std::to_string(base.ground_size) + " expected, " +
                       std::to_string(blocks.blocks.size()) + " given)");

  // validate first (empty selected blocks), then count, so oversized requests
  // fail loudly before allocation and invalid ones fail before that
  for (std::uint64_t f : base.members)
    for (int i = 0; i < base.ground_size; ++i)
      if (((f >> i) & 1) && blocks.blocks[i] == 0)
        throw InvalidInput("base member selects empty block U_" + std::to_string(i + 1));
  unsigned __int128 total = 0;
  for (std::uint64_t f : base.members) {
    unsigned __int128 ways = 1;
    for (int i = 0; i < base.ground_size; ++i)
      if ((f >> i) & 1) {
        ways *= static_cast<unsigned>(std::popcount(blocks.blocks[i]));
        if (ways > member_cap) break;
      }
    total += ways;
    if (total > member_cap)
      throw ResourceLimit("blow-up would materialize more than " +
                          std::to_string(member_cap) + " members");
  }

  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(total));
  std::vector<int> selected;
  for (std::uint64_t f : base.members) {
    selected.clear();
    for (int i = 0; i < base.ground_size; ++i)
      if ((f >> i) & 1) selected.push_back(i);
    // odometer over one chosen bit per selected block
    std::vector<std::uint64_t> cursor(selected.size());
    for (std::size_t s = 0; s < selected.size(); ++s)
      cursor[s] = blocks.blocks[selected[s]] & -blocks.blocks[selected[s]];
    while (true) {
      std::uint64_t mask = 0;
      for (std::uint64_t c : cursor) mask |= c;
      out.push_back(mask);
      // advance odometer
      std::size_t s = 0;
      for (; s < cursor.size(); ++s) {
        std::uint64_t blk = blocks.blocks[selected[s]];
        std::uint64_t rest = blk & ~(cursor[s] | (cursor[s] - 1));  // bits above cursor
        if (rest) {
          cursor[s] = rest & -rest;
          break;
        }
        cursor[s] = blk & -blk;  // wrap and carry
      }
      if (s == cursor.size()) break;
    }
  }
  return SetFamily::from_members(blocks.ground_size, std::move(out));
}

SetFamily tensor_power(const SetFamily& family, int t, int k, std::size_t member_cap) {
  if (t < 1) throw InvalidInput("tensor power needs t >= 1");
  if (family.members.empty()) throw InvalidInput("tensor power of an empty family");
  if (family.size() <= 4096) {
    if (find_k_sunflower(family, k).has_value())
      throw InvalidInput("tensor power input family is not k-sunflower-free");
  }

  // largest uniform layer, ties toward smaller popcount
  std::vector<std::size_t> layer_count(65, 0);
  for (std::uint64_t m : family.members)
    ++layer_count[static_cast<std::size_t>(std::popcount(m))];
  int r = 0;
  for (int c = 0; c <= 64; ++c)
    if (layer_count[c] > layer_count[r]) r = c;
  std::vector<std::uint64_t> layer;
  for (std::uint64_t m : family.members)
    if (std::popcount(m) == r) layer.push_back(m);

  long long ground = static_cast<long long>(family.ground_size) * t;
  if (ground > 64)
    throw GroundSetOverflow("tensor power ground set needs " + std::to_string(ground) +
                            " elements (max 64)");
  unsigned __int128 total = 1;
  for (int c = 0; c < t; ++c) {
    total *= layer.size();
    if (total > member_cap)
      throw ResourceLimit("tensor power would materialize more than " +
                          std::to_string(member_cap) + " members");
  }

  std::vector<std::uint64_t> acc{0};
  for (int c = 0; c < t; ++c) {
    std::vector<std::uint64_t> next;
    next.reserve(acc.size() * layer.size());
    int shift = c * family.ground_size;
    for (std::uint64_t a : acc)
      for (std::uint64_t m : layer) next.push_back(a | (m << shift));
    acc = std::move(next);
  }
  return SetFamily::from_members(static_cast<int>(ground), std::move(acc));
}

}  // namespace lcmcap
