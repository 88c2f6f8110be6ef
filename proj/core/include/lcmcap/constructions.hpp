#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcmcap/primes.hpp"
#include "lcmcap/rat.hpp"
#include "lcmcap/setfam.hpp"

namespace lcmcap {

inline constexpr std::size_t kDefaultElementCap = 1'000'000;

// Disjoint prime blocks P_1..P_t built greedily so each completed block's
// reciprocal sum J_i lands in [threshold, threshold + cap), cap = 1/min(prime).
struct BlockPartition {
  std::vector<std::vector<std::uint64_t>> blocks;  // ascending primes per block
  std::vector<Rat> sums;                           // J_i, exact
  std::vector<std::uint64_t> leftovers;            // unused primes, ascending
  double threshold = 0;
  Rat cap;
};

// Greedy left-to-right bucketing: append the next unused prime to the current
// block until its reciprocal sum reaches the threshold, then start a new block.
// Throws BucketShortfall (carrying the achieved count) when fewer than
// count_target blocks complete; count_target = 0 never fails.
BlockPartition greedy_buckets(const std::vector<std::uint64_t>& primes,
                              double threshold, int count_target = 0);

// Degree-r elementary symmetric polynomial of the weights, by the stable
// column recurrence (O(n*r) exact-rational work). r > n gives 0; r = 0 gives 1.
Rat esym(const std::vector<Rat>& weights, int r);
// Direct subset-enumeration oracle for cross-checking; |weights| <= 20.
Rat esym_enumerate(const std::vector<Rat>& weights, int r);

// The bucket threshold maximizing the per-bucket exponent, B* = e*(r!)^(1/r)
// with r = k-2, and the resulting exponent c_k = r/B*.
double optimal_B(int k);
double ck(int k);
// Per-bucket exponent g(B) = (r*log(B) - log(r!))/B; g(optimal_B(k)) = ck(k).
double bucket_exponent(int k, double B);

// Outcome of a freeness search over a materialized family.
struct FreenessCheck {
  bool checked = false;
  bool free = false;
  std::vector<int> witness;  // indices into the checked list when a tuple exists
  std::string method;        // which detector ran
};

// Product construction: one squarefree integer per choice of an r-subset from
// each block; the reciprocal sum factors as a product of per-block elementary
// symmetric sums.
struct ProductConstructionReport {
  int k = 0;
  int r = 0;
  std::size_t block_count = 0;
  double threshold = 0;
  Rat cap;
  double predicted_exponent = 0;        // bucket_exponent(k, threshold)
  Rat harmonic_sum;                     // prod_i esym(1/p : p in P_i, r)
  double element_count = 0;             // prod_i C(|P_i|, r), may be huge
  bool enumerated = false;
  bool truncated = false;
  std::vector<Int> elements;            // ascending, when enumerated
  std::optional<SetFamily> support;     // prime-support masks, when <= 64 primes
  std::optional<bool> sum_matches;      // enumerated sum == harmonic_sum
  FreenessCheck freeness;               // no k equal pairwise LCMs
};

// Builds the product construction over the given buckets. Every block needs at
// least r = k-2 primes (InvalidInput otherwise). With enumerate_elements set,
// materializes the elements when the count is within element_cap, verifies the
// reciprocal-sum identity exactly, and searches for k equal pairwise LCMs via
// the support-union detector; a count above the cap throws ResourceLimit
// unless allow_truncate, which materializes only the first element_cap
// elements and skips the sum identity.
ProductConstructionReport thm12_construction(int k, const BlockPartition& buckets,
                                             bool enumerate_elements = false,
                                             std::size_t element_cap = kDefaultElementCap,
                                             bool allow_truncate = false);

// Family-indexed construction: each member F of a family on [t] contributes
// the elements picking one prime from each block indexed by F; the reciprocal
// sum is sum_F prod_{i in F} J_i, at least |family| when every J_i >= 1.
struct FamilyConstructionReport {
  int k = 0;
  std::size_t block_count = 0;
  std::size_t family_size = 0;
  Rat harmonic_sum;                 // sum over members of prod J_i
  bool lower_bound_ok = false;      // harmonic_sum >= |family|
  std::uint64_t seed = 0;
  std::vector<Int> samples;         // one sampled element per member, if asked
  std::optional<SetFamily> sample_support;
  FreenessCheck freeness;           // cosunflower search on sampled supports
};

// Requires at least as many blocks as the family's ground size and every used
// J_i >= 1 (InvalidInput otherwise); the family must have no k-cosunflower
// (verified when the member count permits). sample_elements draws one random
// per-block prime choice per member (deterministic in seed) and spot-checks
// that the sampled supports stay k-cosunflower-free.
FamilyConstructionReport thm15_construction(const SetFamily& family, int k,
                                            const BlockPartition& buckets,
                                            bool sample_elements = false,
                                            std::uint64_t seed = 1,
                                            std::size_t sample_cap = kDefaultElementCap);

// A ground set with independent inclusion weights in [0,1].
struct WeightedGroundSet {
  std::vector<std::uint64_t> labels;  // external names (e.g. primes); may be empty
  std::vector<Rat> weights;

  std::size_t size() const { return weights.size(); }
  Rat total() const;
  void validate() const;  // throws InvalidInput on a weight outside [0,1]
};

// mu_w(family) = sum over members of prod_{a in B} w_a * prod_{a not in B} (1-w_a).
Rat product_measure(const SetFamily& family, const WeightedGroundSet& wgs);

// Reciprocal-label sum over the family: sum over members of 1/prod labels.
// Requires labels; with w_a = 1/(label_a + 1) this equals
// product_measure(family)/product_measure({empty set}).
Rat family_harmonic_sum(const SetFamily& family);

// Greedy weighted partition into inclusion-minimal blocks of weight >= c.
struct WeightedPartition {
  std::vector<std::vector<int>> blocks;  // element indices, ascending per block
  std::vector<int> remainder;            // indices, ascending; weight <= c
};

// Repeatedly scans the remaining elements in order, accumulating a block until
// its weight reaches c, then drops every element whose removal keeps the block
// at or above c (inclusion-minimality). Each block's weight lies in
// [c, c + max_a w_a); the remainder weighs at most c. Requires 0 < c < 1.
WeightedPartition weighted_partition(const WeightedGroundSet& wgs, const Rat& c);

// Blow-up of a cosunflower-free family over a weighted partition, with the
// exact product measure and the per-block decomposition quantities.
struct WeightedPipelineReport {
  WeightedPartition partition;
  SetFamily family;                    // the blow-up, over the ground elements
  Rat measure;                         // mu_w(family), exact
  std::vector<Rat> block_none;         // r_i = prod_{a in A_i} (1 - w_a)
  std::vector<Rat> block_one;          // q_i = sum_a w_a prod_{b != a} (1 - w_b)
  Rat remainder_none;                  // s = prod over remainder of (1 - w_a)
  bool measure_identity_ok = false;    // mu_w == s * sum_F prod q_i prod r_i
  bool ratio_identity_ok = false;      // q_i/r_i == sum w_a/(1-w_a) >= sum w_a
  std::optional<bool> harmonic_identity_ok;  // when w_a = 1/(label_a+1)
  Rat harmonic_sum;                    // family_harmonic_sum, when labels exist
  FreenessCheck freeness;
};

// Partitions the ground set at level c, verifies the base family (ground size
// must equal the block count) has no k-cosunflower when small enough, blows it
// up, and cross-checks the measure two ways. Ground sets above 64 elements
// overflow the mask representation (GroundSetOverflow).
WeightedPipelineReport weighted_cosunflower_pipeline(const WeightedGroundSet& wgs,
                                                     const Rat& c,
                                                     const SetFamily& base, int k);

// Majorant for the reciprocal sum of squarefree products exceeding N:
// (1/log N) * prod_{q in P} (1 + 1/q) * sum_{p in P} log(p)/p.
struct TailBound {
  double majorant = 0;
  bool exact_checked = false;
  Rat exact_tail;       // sum over subsets Q with prod Q > N of 1/prod Q
  bool within = false;  // exact_tail <= majorant
};

// Requires N >= 3 and every entry of P prime per the table (InvalidInput
// otherwise). The exact tail is enumerated when 2^|P| <= subset_cap.
TailBound tail_harmonic_bound(const PrimeTable& table,
                              const std::vector<std::uint64_t>& P, std::uint64_t N,
                              std::size_t subset_cap = std::size_t{1} << 20);

// Parameter choices driven by the target integer size N (taken as a real
// number): block threshold regimes for the two constructions. Only reports
// what the parameters would be; nothing here sieves to x.
struct NDrivenParams {
  double L = 0;      // log log N
  double delta = 0;  // block-sum slack
  std::uint64_t t = 0;
  double x = 0;      // upper end of the prime pool
  double y = 0;      // lower end of the prime pool
};

// Product construction regime: delta = L^(-1/2), t = floor((1-delta)L/B),
// x = N^(1/(rt)), y = exp(L^(1/3)). B <= 0 selects optimal_B(k).
NDrivenParams thm12_params(double N, int k, double B = 0);
// Family construction regime: t = floor(L - 2 log L), delta = 1/L, y = L^2,
// x = N^(1/t).
NDrivenParams thm15_params(double N);

}  // namespace lcmcap
