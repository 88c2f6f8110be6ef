#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lcmcap/primes.hpp"
#include "lcmcap/rat.hpp"
#include "lcmcap/setfam.hpp"

namespace lcmcap {

inline constexpr std::uint64_t kDefaultFkBudget = 200'000'000;
inline constexpr std::uint64_t kDefaultFkCeiling = 60;

// A finite set of positive integers with factored forms; the carrier for
// LCM-k-tuple detection, representation families and the exact f_k solver.
struct LcmInstance {
  std::vector<std::uint64_t> elements;  // ascending, distinct, >= 1
  std::vector<std::vector<std::pair<std::uint64_t, int>>> factorizations;
  std::vector<std::uint64_t> occurring_primes;  // ascending, across all elements
  // Support bitmask per element over occurring_primes (bit i = prime i divides
  // the element); empty when more than 64 primes occur.
  std::vector<std::uint64_t> support_masks;

  // Requires table.limit^2 >= max element: trial division by the table primes
  // then certifies any remaining cofactor as prime.
  static LcmInstance from_elements(std::vector<std::uint64_t> elements,
                                   const PrimeTable& table);

  bool contains(std::uint64_t value) const;
  bool all_squarefree() const;
};

// Lexicographically smallest ascending k-tuple of element values whose pairwise
// lcms all coincide, if any. Pair lcms are computed in 128-bit arithmetic, so
// products of two 64-bit elements can never wrap. The naive variant enumerates
// pruned k-subsets and is the cross-validation oracle.
std::optional<std::vector<std::uint64_t>> find_lcm_k_tuple(const LcmInstance& instance,
                                                           int k);
std::optional<std::vector<std::uint64_t>> find_lcm_k_tuple_naive(
    const LcmInstance& instance, int k);
bool is_lcm_k_free(const LcmInstance& instance, int k);

// Exact maximum of sum 1/a over LCM-k-free subsets of [N].
struct FkResult {
  std::uint64_t N = 0;
  int k = 0;
  Rat value;
  std::vector<std::uint64_t> optimal_set;  // ascending; lexicographically
                                           // smallest among the optima
  bool exact = true;
  std::uint64_t nodes = 0;
};

// Branch and bound in decreasing weight order (ascending a); prunes on the
// exact rational suffix bound. N above exact_ceiling is rejected loudly;
// a spent node budget downgrades the result to a flagged lower bound.
FkResult exact_fk(std::uint64_t N, int k, std::uint64_t node_budget = kDefaultFkBudget,
                  std::uint64_t exact_ceiling = kDefaultFkCeiling);

// Family F_m on the distinct primes of m: one member per ell-subset S of those
// primes with m / prod(S) an element of the instance. Labels are the primes.
SetFamily representation_family(std::uint64_t m, const LcmInstance& instance, int ell);

// r_ell(m): number of members of the family above.
std::size_t representation_count(std::uint64_t m, const LcmInstance& instance, int ell);

// Supports of a squarefree instance as a set family over its occurring primes
// (labels are the prime values). Non-squarefree elements are invalid input.
SetFamily support_family(const LcmInstance& instance);

}  // namespace lcmcap
