#include "lcmcap/constructions.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "lcmcap/errors.hpp"

namespace lcmcap {

BlockPartition greedy_buckets(const std::vector<std::uint64_t>& primes,
                              double threshold, int count_target) {
  if (threshold <= 0) throw InvalidInput("bucket threshold must be positive");
  if (!std::is_sorted(primes.begin(), primes.end()) ||
      std::adjacent_find(primes.begin(), primes.end()) != primes.end())
    throw InvalidInput("prime pool must be strictly ascending");
  for (std::uint64_t p : primes)
    if (p < 2) throw InvalidInput("prime pool entries must be >= 2");

  BlockPartition part;
  part.threshold = threshold;
  part.cap = primes.empty() ? Rat(0) : Rat(1, static_cast<unsigned long>(primes[0]));
  const Rat bound(threshold);  // exact binary value of the double

  std::vector<std::uint64_t> current;
  Rat sum(0);
  for (std::uint64_t p : primes) {
    current.push_back(p);
    sum += Rat(1, static_cast<unsigned long>(p));
    if (sum >= bound) {
      part.blocks.push_back(std::move(current));
      part.sums.push_back(sum);
      current.clear();
      sum = 0;
    }
  }
  part.leftovers = std::move(current);

  if (count_target > 0 && static_cast<int>(part.blocks.size()) < count_target)
    throw BucketShortfall("harmonic mass ran out after " +
                              std::to_string(part.blocks.size()) + " of " +
                              std::to_string(count_target) + " blocks",
                          part.blocks.size());
  return part;
}

Rat esym(const std::vector<Rat>& weights, int r) {
  if (r < 0) throw InvalidInput("elementary symmetric degree must be >= 0");
  std::vector<Rat> col(static_cast<std::size_t>(r) + 1, Rat(0));
  col[0] = 1;
  for (const Rat& w : weights)
    for (int j = r; j >= 1; --j) col[j] += w * col[j - 1];
  return col[r];
}

Rat esym_enumerate(const std::vector<Rat>& weights, int r) {
  if (r < 0) throw InvalidInput("elementary symmetric degree must be >= 0");
  const int n = static_cast<int>(weights.size());
  if (n > 20) throw ResourceLimit("enumeration oracle capped at 20 weights");
  if (r > n) return Rat(0);
  Rat total(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) != r) continue;
    Rat term(1);
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) term *= weights[i];
    total += term;
  }
  return total;
}

double optimal_B(int k) {
  if (k < 3) throw InvalidInput("construction needs k >= 3");
  const int r = k - 2;
  return std::exp(1.0 + std::lgamma(r + 1.0) / r);
}

double ck(int k) { return (k - 2) / optimal_B(k); }

double bucket_exponent(int k, double B) {
  if (k < 3) throw InvalidInput("construction needs k >= 3");
  if (B <= 0) throw InvalidInput("bucket threshold must be positive");
  const int r = k - 2;
  return (r * std::log(B) - std::lgamma(r + 1.0)) / B;
}

namespace {

// Combinations of {0..n-1} of size r in lexicographic order.
std::vector<std::vector<int>> combinations(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r > n || r < 0) return out;
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  return p > kMax ? kMax : static_cast<std::uint64_t>(p);
}

double binom_double(int n, int r) {
  double v = 1;
  for (int i = 0; i < r; ++i) v = v * (n - i) / (i + 1);
  return v;
}

// Sorted union of the block primes with a prime -> bit index map; throws on
// overlap between blocks.
std::vector<std::uint64_t> pooled_primes(const BlockPartition& buckets) {
  std::vector<std::uint64_t> all;
  for (const auto& block : buckets.blocks)
    all.insert(all.end(), block.begin(), block.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw InvalidInput("blocks must be pairwise disjoint");
  return all;
}

int index_of(const std::vector<std::uint64_t>& sorted, std::uint64_t value) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), value) -
                          sorted.begin());
}

}  // namespace

ProductConstructionReport thm12_construction(int k, const BlockPartition& buckets,
                                             bool enumerate_elements,
                                             std::size_t element_cap,
                                             bool allow_truncate) {
  if (k < 3) throw InvalidInput("construction needs k >= 3");
  const int r = k - 2;
  const std::size_t t = buckets.blocks.size();
  if (t == 0) throw InvalidInput("construction needs at least one block");
  for (std::size_t i = 0; i < t; ++i)
    if (static_cast<int>(buckets.blocks[i].size()) < r)
      throw InvalidInput("block " + std::to_string(i) + " has " +
                         std::to_string(buckets.blocks[i].size()) +
                         " primes, fewer than the subset size " + std::to_string(r));

  ProductConstructionReport report;
  report.k = k;
  report.r = r;
  report.block_count = t;
  report.threshold = buckets.threshold;
  report.cap = buckets.cap;
  report.predicted_exponent =
      buckets.threshold > 0 ? bucket_exponent(k, buckets.threshold) : 0;

  report.harmonic_sum = 1;
  std::uint64_t count_sat = 1;
  report.element_count = 1;
  for (const auto& block : buckets.blocks) {
    std::vector<Rat> weights;
    weights.reserve(block.size());
    for (std::uint64_t p : block) weights.emplace_back(1, static_cast<unsigned long>(p));
    report.harmonic_sum *= esym(weights, r);
    const int n = static_cast<int>(block.size());
    report.element_count *= binom_double(n, r);
    std::uint64_t c = 1;
    for (int i = 0; i < r; ++i) c = saturating_mul(c, n - i) / (i + 1);
    count_sat = saturating_mul(count_sat, c);
  }

  if (!enumerate_elements) return report;

  if (count_sat > element_cap) {
    if (!allow_truncate)
      throw ResourceLimit("element count " + std::to_string(count_sat) +
                          " exceeds the enumeration cap " + std::to_string(element_cap) +
                          "; pass allow_truncate to materialize a prefix");
    report.truncated = true;
  }
  report.enumerated = true;

  const std::vector<std::uint64_t> pool = pooled_primes(buckets);
  const bool masks_fit = pool.size() <= 64;

  // Per block: every r-subset's product and (when they fit) support mask.
  struct Choice {
    Int product;
    std::uint64_t mask;
  };
  std::vector<std::vector<Choice>> choices(t);
  for (std::size_t i = 0; i < t; ++i) {
    const auto& block = buckets.blocks[i];
    for (const auto& pick : combinations(static_cast<int>(block.size()), r)) {
      Choice ch{Int(1), 0};
      for (int j : pick) {
        ch.product *= static_cast<unsigned long>(block[j]);
        if (masks_fit) ch.mask |= std::uint64_t{1} << index_of(pool, block[j]);
      }
      choices[i].push_back(std::move(ch));
    }
  }

  std::vector<Int> values;
  std::vector<std::uint64_t> masks;
  std::vector<std::size_t> digit(t, 0);
  std::vector<Int> partial(t + 1, Int(1));
  for (std::size_t i = 0; i < t; ++i) partial[i + 1] = partial[i] * choices[i][0].product;
  while (true) {
    values.push_back(partial[t]);
    if (masks_fit) {
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < t; ++i) m |= choices[i][digit[i]].mask;
      masks.push_back(m);
    }
    if (values.size() >= element_cap && report.truncated) break;
    std::size_t pos = t;
    while (pos > 0 && digit[pos - 1] + 1 == choices[pos - 1].size()) {
      digit[pos - 1] = 0;
      --pos;
    }
    if (pos == 0) break;
    ++digit[pos - 1];
    for (std::size_t i = pos - 1; i < t; ++i)
      partial[i + 1] = partial[i] * choices[i][digit[i]].product;
  }

  // Sort by value, keeping the masks aligned.
  std::vector<std::size_t> order(values.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  report.elements.reserve(values.size());
  std::vector<std::uint64_t> sorted_masks;
  for (std::size_t i : order) {
    report.elements.push_back(values[i]);
    if (masks_fit) sorted_masks.push_back(masks[i]);
  }

  if (!report.truncated) {
    Rat enumerated_sum(0);
    for (const Int& v : report.elements) enumerated_sum += Rat(1) / Rat(v);
    report.sum_matches = (enumerated_sum == report.harmonic_sum);
  }

  if (masks_fit) {
    report.support = SetFamily::from_members(static_cast<int>(pool.size()),
                                             sorted_masks, pool);
    // Squarefree elements share all pairwise LCMs exactly when their prime
    // supports share all pairwise unions.
    auto witness = find_k_equal_unions(sorted_masks, k);
    report.freeness.checked = true;
    report.freeness.free = !witness.has_value();
    if (witness) report.freeness.witness = *witness;
    report.freeness.method =
        report.truncated ? "support-union search (truncated prefix)"
                         : "support-union search";
  } else {
    report.freeness.method = "skipped: more than 64 primes in the pool";
  }
  return report;
}

FamilyConstructionReport thm15_construction(const SetFamily& family, int k,
                                            const BlockPartition& buckets,
                                            bool sample_elements, std::uint64_t seed,
                                            std::size_t sample_cap) {
  if (k < 3) throw InvalidInput("construction needs k >= 3");
  const int t = family.ground_size;
  if (buckets.blocks.size() < static_cast<std::size_t>(t))
    throw InvalidInput("family ground size " + std::to_string(t) + " exceeds the " +
                       std::to_string(buckets.blocks.size()) + " available blocks");
  for (int i = 0; i < t; ++i)
    if (buckets.sums[i] < 1)
      throw InvalidInput("block " + std::to_string(i) +
                         " has reciprocal sum below 1; the family-indexed "
                         "construction needs every used block at or above 1");

  constexpr std::size_t kVerifyCap = 4096;
  if (family.size() <= kVerifyCap && find_k_cosunflower(family, k))
    throw InvalidInput("family contains " + std::to_string(k) +
                       " sets with equal pairwise unions");

  FamilyConstructionReport report;
  report.k = k;
  report.block_count = static_cast<std::size_t>(t);
  report.family_size = family.size();
  report.seed = seed;

  report.harmonic_sum = 0;
  for (std::uint64_t member : family.members) {
    Rat term(1);
    for (int i = 0; i < t; ++i)
      if (member >> i & 1) term *= buckets.sums[i];
    report.harmonic_sum += term;
  }
  report.lower_bound_ok =
      report.harmonic_sum >= Rat(static_cast<unsigned long>(family.size()));

  if (!sample_elements) return report;

  std::vector<std::uint64_t> pool;
  for (int i = 0; i < t; ++i)
    pool.insert(pool.end(), buckets.blocks[i].begin(), buckets.blocks[i].end());
  std::sort(pool.begin(), pool.end());
  if (std::adjacent_find(pool.begin(), pool.end()) != pool.end())
    throw InvalidInput("blocks must be pairwise disjoint");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint64_t>> sample_primes;
  const std::size_t limit = std::min(family.size(), sample_cap);
  for (std::size_t m = 0; m < limit; ++m) {
    const std::uint64_t member = family.members[m];
    Int value(1);
    std::vector<std::uint64_t> drawn;
    for (int i = 0; i < t; ++i) {
      if (!(member >> i & 1)) continue;
      const auto& block = buckets.blocks[i];
      // modulo draw: identical streams on every platform for a fixed seed
      const std::uint64_t p = block[rng() % block.size()];
      value *= static_cast<unsigned long>(p);
      drawn.push_back(p);
    }
    report.samples.push_back(std::move(value));
    sample_primes.push_back(std::move(drawn));
  }

  // Only the primes that were actually drawn matter for the sampled supports,
  // so the mask universe is compressed to them; the full pool may hold far
  // more than 64 primes. Distinct members always yield distinct supports
  // (each prime belongs to exactly one block), so no mask collisions arise.
  std::vector<std::uint64_t> used;
  for (const auto& drawn : sample_primes)
    used.insert(used.end(), drawn.begin(), drawn.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  if (used.size() <= 64) {
    std::vector<std::uint64_t> sample_masks;
    sample_masks.reserve(sample_primes.size());
    for (const auto& drawn : sample_primes) {
      std::uint64_t mask = 0;
      for (std::uint64_t p : drawn) mask |= std::uint64_t{1} << index_of(used, p);
      sample_masks.push_back(mask);
    }
    report.sample_support = SetFamily::from_members(static_cast<int>(used.size()),
                                                    sample_masks, used);
    auto witness = find_k_equal_unions(sample_masks, k);
    report.freeness.checked = true;
    report.freeness.free = !witness.has_value();
    if (witness) report.freeness.witness = *witness;
    report.freeness.method = limit < family.size()
                                 ? "support-union search (sample prefix)"
                                 : "support-union search (sampled elements)";
  } else {
    report.freeness.method = "skipped: more than 64 distinct primes drawn";
  }
  return report;
}

Rat WeightedGroundSet::total() const {
  Rat sum(0);
  for (const Rat& w : weights) sum += w;
  return sum;
}

void WeightedGroundSet::validate() const {
  if (!labels.empty() && labels.size() != weights.size())
    throw InvalidInput("label list must be empty or match the weight count");
  for (const Rat& w : weights)
    if (w < 0 || w > 1) throw InvalidInput("weights must lie in [0, 1]");
}

Rat product_measure(const SetFamily& family, const WeightedGroundSet& wgs) {
  wgs.validate();
  if (static_cast<std::size_t>(family.ground_size) != wgs.size())
    throw InvalidInput("family ground size " + std::to_string(family.ground_size) +
                       " does not match the " + std::to_string(wgs.size()) +
                       " weighted elements");
  Rat total(0);
  for (std::uint64_t member : family.members) {
    Rat term(1);
    for (std::size_t a = 0; a < wgs.size(); ++a)
      term *= (member >> a & 1) ? wgs.weights[a] : 1 - wgs.weights[a];
    total += term;
  }
  return total;
}

Rat family_harmonic_sum(const SetFamily& family) {
  if (family.labels.empty() && family.ground_size > 0)
    throw InvalidInput("reciprocal-label sum needs a labeled ground set");
  for (std::uint64_t label : family.labels)
    if (label == 0) throw InvalidInput("labels must be positive for reciprocal sums");
  Rat total(0);
  for (std::uint64_t member : family.members) {
    Int prod(1);
    for (int i = 0; i < family.ground_size; ++i)
      if (member >> i & 1) prod *= static_cast<unsigned long>(family.labels[i]);
    total += Rat(1) / Rat(prod);
  }
  return total;
}

WeightedPartition weighted_partition(const WeightedGroundSet& wgs, const Rat& c) {
  wgs.validate();
  if (c <= 0 || c >= 1) throw InvalidInput("partition level must satisfy 0 < c < 1");

  WeightedPartition part;
  std::vector<int> remaining(wgs.size());
  for (std::size_t i = 0; i < wgs.size(); ++i) remaining[i] = static_cast<int>(i);

  while (true) {
    // Accumulate remaining elements in order until the block reaches c.
    std::vector<int> block;
    Rat sum(0);
    std::size_t used = 0;
    for (; used < remaining.size() && sum < c; ++used) {
      block.push_back(remaining[used]);
      sum += wgs.weights[remaining[used]];
    }
    if (sum < c) break;  // the rest is the remainder

    // Drop every element whose removal keeps the block at or above c; what
    // survives is inclusion-minimal. Dropped elements stay available.
    std::vector<int> kept;
    for (std::size_t j = 0; j < block.size(); ++j) {
      const Rat& w = wgs.weights[block[j]];
      if (sum - w >= c)
        sum -= w;
      else
        kept.push_back(block[j]);
    }

    std::vector<int> next_remaining;
    std::size_t kp = 0;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      if (kp < kept.size() && remaining[j] == kept[kp])
        ++kp;
      else
        next_remaining.push_back(remaining[j]);
    }
    remaining = std::move(next_remaining);
    part.blocks.push_back(std::move(kept));
  }
  part.remainder = remaining;
  return part;
}

WeightedPipelineReport weighted_cosunflower_pipeline(const WeightedGroundSet& wgs,
                                                     const Rat& c,
                                                     const SetFamily& base, int k) {
  wgs.validate();
  if (k < 3) throw InvalidInput("pipeline needs k >= 3");
  if (wgs.size() > 64)
    throw GroundSetOverflow("pipeline ground set capped at 64 elements, got " +
                            std::to_string(wgs.size()));

  WeightedPipelineReport report;
  report.partition = weighted_partition(wgs, c);
  const std::size_t n = report.partition.blocks.size();
  if (static_cast<std::size_t>(base.ground_size) != n)
    throw InvalidInput("base family ground size " + std::to_string(base.ground_size) +
                       " does not match the " + std::to_string(n) +
                       " partition blocks at this level");

  constexpr std::size_t kVerifyCap = 4096;
  if (base.size() <= kVerifyCap && find_k_cosunflower(base, k))
    throw InvalidInput("base family contains " + std::to_string(k) +
                       " sets with equal pairwise unions");

  Blocks blocks;
  blocks.ground_size = static_cast<int>(wgs.size());
  for (const auto& idx : report.partition.blocks) {
    std::uint64_t mask = 0;
    for (int a : idx) mask |= std::uint64_t{1} << a;
    blocks.blocks.push_back(mask);
  }
  for (int a : report.partition.remainder)
    blocks.remainder |= std::uint64_t{1} << a;

  report.family = blow_up(base, blocks);
  report.family.labels = wgs.labels;
  report.measure = product_measure(report.family, wgs);

  auto none_prob = [&wgs](const std::vector<int>& idx) {
    Rat prod(1);
    for (int a : idx) prod *= 1 - wgs.weights[a];
    return prod;
  };
  auto one_prob = [&wgs](const std::vector<int>& idx) {
    Rat sum(0);
    for (int a : idx) {
      Rat term = wgs.weights[a];
      for (int b : idx)
        if (b != a) term *= 1 - wgs.weights[b];
      sum += term;
    }
    return sum;
  };
  for (const auto& idx : report.partition.blocks) {
    report.block_none.push_back(none_prob(idx));
    report.block_one.push_back(one_prob(idx));
  }
  report.remainder_none = none_prob(report.partition.remainder);

  // Route two: independence across blocks.
  Rat via_blocks(0);
  for (std::uint64_t member : base.members) {
    Rat term = report.remainder_none;
    for (std::size_t i = 0; i < n; ++i)
      term *= (member >> i & 1) ? report.block_one[i] : report.block_none[i];
    via_blocks += term;
  }
  report.measure_identity_ok = (report.measure == via_blocks);

  report.ratio_identity_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    Rat ratio_sum(0);
    Rat weight_sum(0);
    bool all_below_one = true;
    for (int a : report.partition.blocks[i]) {
      const Rat& w = wgs.weights[a];
      weight_sum += w;
      if (w == 1) {
        all_below_one = false;
        break;
      }
      ratio_sum += w / (1 - w);
    }
    if (!all_below_one) continue;  // ratio undefined; identity vacuous
    if (report.block_one[i] != report.block_none[i] * ratio_sum ||
        ratio_sum < weight_sum)
      report.ratio_identity_ok = false;
  }

  if (!wgs.labels.empty()) {
    report.harmonic_sum = family_harmonic_sum(report.family);
    bool reciprocal_weights = true;
    for (std::size_t a = 0; a < wgs.size(); ++a)
      if (wgs.weights[a] != Rat(1, static_cast<unsigned long>(wgs.labels[a] + 1))) {
        reciprocal_weights = false;
        break;
      }
    if (reciprocal_weights) {
      Rat empty_measure(1);
      for (const Rat& w : wgs.weights) empty_measure *= 1 - w;
      report.harmonic_identity_ok =
          (report.harmonic_sum * empty_measure == report.measure);
    }
  }

  constexpr std::size_t kFreenessCap = 20000;
  if (report.family.size() <= kFreenessCap) {
    auto witness = find_k_cosunflower(report.family, k);
    report.freeness.checked = true;
    report.freeness.free = !witness.has_value();
    if (witness) report.freeness.witness = *witness;
    report.freeness.method = "union-grouped cosunflower search";
  } else {
    report.freeness.method = "skipped: family too large for the pairwise search";
  }
  return report;
}

TailBound tail_harmonic_bound(const PrimeTable& table,
                              const std::vector<std::uint64_t>& P, std::uint64_t N,
                              std::size_t subset_cap) {
  if (N < 3) throw InvalidInput("tail bound needs N >= 3");
  std::vector<std::uint64_t> primes = P;
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end())
    throw InvalidInput("tail bound prime list has duplicates");
  for (std::uint64_t p : primes)
    if (!table.is_prime(p))
      throw InvalidInput(std::to_string(p) + " is not prime");

  TailBound out;
  double euler = 1, logsum = 0;
  for (std::uint64_t p : primes) {
    euler *= 1.0 + 1.0 / static_cast<double>(p);
    logsum += std::log(static_cast<double>(p)) / static_cast<double>(p);
  }
  out.majorant = euler * logsum / std::log(static_cast<double>(N));

  if (primes.size() < 63 &&
      (std::size_t{1} << primes.size()) <= subset_cap) {
    // Once a partial product exceeds N every superset is in the tail, and the
    // supersets' reciprocal sum has the closed form (1/prod) * prod (1 + 1/p)
    // over the undecided primes.
    std::vector<Rat> tail_factor(primes.size() + 1, Rat(1));
    for (std::size_t i = primes.size(); i-- > 0;)
      tail_factor[i] = tail_factor[i + 1] *
                       (1 + Rat(1, static_cast<unsigned long>(primes[i])));
    Rat total(0);
    Int bound(static_cast<unsigned long>(N));
    auto dfs = [&](auto&& self, std::size_t idx, const Int& prod) -> void {
      if (prod > bound) {
        total += tail_factor[idx] / Rat(prod);
        return;
      }
      if (idx == primes.size()) return;
      self(self, idx + 1, prod);
      self(self, idx + 1, prod * static_cast<unsigned long>(primes[idx]));
    };
    dfs(dfs, 0, Int(1));
    out.exact_checked = true;
    out.exact_tail = total;
    out.within = (total <= Rat(out.majorant));
  }
  return out;
}

NDrivenParams thm12_params(double N, int k, double B) {
  if (k < 3) throw InvalidInput("construction needs k >= 3");
  if (!(N >= 16)) throw InvalidInput("parameter helper needs N >= 16");
  if (B <= 0) B = optimal_B(k);
  const int r = k - 2;
  NDrivenParams out;
  out.L = std::log(std::log(N));
  out.delta = 1.0 / std::sqrt(out.L);
  const double t_real = (1 - out.delta) * out.L / B;
  if (t_real < 1)
    throw InvalidInput("N is too small for a positive block count at this threshold");
  out.t = static_cast<std::uint64_t>(t_real);
  out.x = std::exp(std::log(N) / (static_cast<double>(r) * out.t));
  out.y = std::exp(std::cbrt(out.L));
  return out;
}

NDrivenParams thm15_params(double N) {
  if (!(N >= 16)) throw InvalidInput("parameter helper needs N >= 16");
  NDrivenParams out;
  out.L = std::log(std::log(N));
  const double t_real = out.L - 2 * std::log(out.L);
  if (t_real < 1)
    throw InvalidInput("N is too small for a positive block count");
  out.t = static_cast<std::uint64_t>(t_real);
  out.delta = 1.0 / out.L;
  out.y = out.L * out.L;
  out.x = std::exp(std::log(N) / out.t);
  return out;
}

}  // namespace lcmcap
