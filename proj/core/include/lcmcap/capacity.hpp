#pragma once

#include <cstdint>
#include <string>

#include "lcmcap/setfam.hpp"

namespace lcmcap {

inline constexpr std::uint64_t kDefaultCapacityBudget = 100'000'000;

// Exact search outcome for the largest k-sunflower-free family on [n].
// `exact` is false when the node budget ran out (F is then a lower bound).
// The witness is the lexicographically smallest optimal family (member masks
// ascending), recovered by a deterministic final sweep at the optimum.
struct CapacityResult {
  int n = 0;
  int k = 0;
  int F = 0;
  SetFamily witness;
  bool exact = true;
  std::uint64_t nodes = 0;
};

// Branch and bound over all 2^n candidate subsets, ordered by (popcount, value),
// with ground-permutation symmetry reduction at the root branching level.
// Guaranteed-tractable default ceiling is n <= 5; larger n run under the budget.
CapacityResult max_sunflower_free(int n, int k,
                                  std::uint64_t node_budget = kDefaultCapacityBudget);

// Dual search (largest k-cosunflower-free family); by complementation its value
// equals max_sunflower_free's, which the tests exercise.
CapacityResult max_cosunflower_free(int n, int k,
                                    std::uint64_t node_budget = kDefaultCapacityBudget);

// (F / (n+1))^(1/n), the capacity lower estimate a size-F family on [n] yields.
// Undefined at n = 0.
double capacity_lower_estimate(const CapacityResult& result);

// Best published bounds on the k-sunflower-free capacity.
struct BoundEntry {
  int k = 0;
  double lower = 1.0;
  std::string lower_source;
  double upper = 2.0;
  std::string upper_source;
};

BoundEntry known_bounds(int k);

}  // namespace lcmcap
