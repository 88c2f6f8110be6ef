#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace lcmcap {

inline constexpr std::size_t kDefaultMemberCap = std::size_t{1} << 22;

// A family of distinct subsets of a labeled ground set of at most 64 elements.
// Members are bitmasks, stored sorted ascending (the canonical order used for
// witnesses and serialization). Element i of the ground set is bit i; labels,
// when present, give element i an external name (e.g. a prime value).
struct SetFamily {
  int ground_size = 0;
  std::vector<std::uint64_t> labels;   // empty, or exactly ground_size entries
  std::vector<std::uint64_t> members;  // sorted ascending, no duplicates

  // Validates, sorts, and rejects duplicate members / stray bits.
  static SetFamily from_members(int ground_size, std::vector<std::uint64_t> members,
                                std::vector<std::uint64_t> labels = {});

  std::uint64_t full_mask() const {
    return ground_size == 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << ground_size) - 1;
  }
  std::size_t size() const { return members.size(); }
};

// Raw predicates on tuples of masks (duplicates permitted).
bool pairwise_intersections_constant(std::span<const std::uint64_t> sets);
bool pairwise_unions_constant(std::span<const std::uint64_t> sets);

// Sunflower: >= 2 distinct sets whose pairwise intersections all coincide
// (the common kernel). Cosunflower is the dual with unions. Duplicate sets
// are rejected as invalid input.
bool is_sunflower(std::span<const std::uint64_t> sets);
bool is_cosunflower(std::span<const std::uint64_t> sets);

// Every ground element lies in 0 or >= k-1 of the k given sets (duplicates
// permitted). Equivalent to pairwise_unions_constant for tuples of k sets.
bool zero_or_many_check(std::span<const std::uint64_t> sets, int ground_size, int k);

// Lexicographically smallest ascending k-tuple of member indices forming a
// k-sunflower (resp. k-cosunflower), if any. The default search groups member
// pairs by intersection (resp. union) value and hunts a k-clique inside each
// group; the *_enum variants do pruned k-subset enumeration and exist as the
// cross-validation oracle.
std::optional<std::vector<int>> find_k_sunflower(const SetFamily& family, int k);
std::optional<std::vector<int>> find_k_sunflower_enum(const SetFamily& family, int k);
std::optional<std::vector<int>> find_k_cosunflower(const SetFamily& family, int k);
std::optional<std::vector<int>> find_k_cosunflower_direct(const SetFamily& family, int k);
std::optional<std::vector<int>> find_k_cosunflower_enum(const SetFamily& family, int k);

// Same searches on raw mask arrays (no SetFamily canonicalization), used when
// the caller's index order matters.
std::optional<std::vector<int>> find_k_equal_intersections(
    std::span<const std::uint64_t> sets, int k);
std::optional<std::vector<int>> find_k_equal_unions(std::span<const std::uint64_t> sets,
                                                    int k);

// Complements every member against the full ground mask and re-canonicalizes.
SetFamily complement_family(const SetFamily& family);

// Disjoint blocks U_1..U_t plus a remainder block covering a ground set exactly.
struct Blocks {
  int ground_size = 0;
  std::vector<std::uint64_t> blocks;
  std::uint64_t remainder = 0;

  void validate() const;  // throws InvalidInput on overlap / coverage gaps
};

// Blow-up of a base family on [t] over t blocks: each base member F turns into
// all sets picking exactly one element from each selected block U_i (i in F)
// and nothing else. A base member selecting an empty block is invalid input.
SetFamily blow_up(const SetFamily& base, const Blocks& blocks,
                  std::size_t member_cap = kDefaultMemberCap);

// t-fold disjoint-copy product of the family's largest uniform layer
// (ties broken toward the smaller popcount). The input must be k-sunflower-free
// (verified when the family is small enough to check cheaply).
SetFamily tensor_power(const SetFamily& family, int t, int k,
                       std::size_t member_cap = kDefaultMemberCap);

}  // namespace lcmcap
