#include "lcmcap/lcmfree.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lcmcap/errors.hpp"
#include "pair_search.hpp"

namespace lcmcap {

namespace {

using U128 = unsigned __int128;

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// lcm(a, b) <= a * b always fits in 128 bits for 64-bit inputs
U128 lcm128(std::uint64_t a, std::uint64_t b) {
  return static_cast<U128>(a / gcd_u64(a, b)) * b;
}

}  // namespace

LcmInstance LcmInstance::from_elements(std::vector<std::uint64_t> elements,
                                       const PrimeTable& table) {
  std::sort(elements.begin(), elements.end());
  if (std::adjacent_find(elements.begin(), elements.end()) != elements.end())
    throw InvalidInput("duplicate elements in LCM instance");
  for (std::uint64_t e : elements)
    if (e == 0) throw InvalidInput("LCM instance elements must be positive");
  if (!elements.empty() &&
      static_cast<U128>(elements.back()) >
          static_cast<U128>(table.limit) * table.limit)
    throw OutOfRangeError("element " + std::to_string(elements.back()) +
                          " exceeds the square of the prime table limit " +
                          std::to_string(table.limit) +
                          ", so trial division cannot certify its factorization");

  LcmInstance inst;
  inst.elements = std::move(elements);
  inst.factorizations.reserve(inst.elements.size());
  for (std::uint64_t e : inst.elements) {
    std::vector<std::pair<std::uint64_t, int>> factors;
    std::uint64_t rest = e;
    for (std::uint64_t p : table.primes) {
      if (p * p > rest) break;
      if (rest % p == 0) {
        int exp = 0;
        while (rest % p == 0) {
          rest /= p;
          ++exp;
        }
        factors.emplace_back(p, exp);
      }
    }
    if (rest > 1) factors.emplace_back(rest, 1);
    inst.factorizations.push_back(std::move(factors));
  }

  for (const auto& factors : inst.factorizations)
    for (const auto& [p, exp] : factors) inst.occurring_primes.push_back(p);
  std::sort(inst.occurring_primes.begin(), inst.occurring_primes.end());
  inst.occurring_primes.erase(
      std::unique(inst.occurring_primes.begin(), inst.occurring_primes.end()),
      inst.occurring_primes.end());

  if (inst.occurring_primes.size() <= 64) {
    inst.support_masks.reserve(inst.elements.size());
    for (const auto& factors : inst.factorizations) {
      std::uint64_t mask = 0;
      for (const auto& [p, exp] : factors) {
        auto it = std::lower_bound(inst.occurring_primes.begin(),
                                   inst.occurring_primes.end(), p);
        mask |= std::uint64_t{1} << (it - inst.occurring_primes.begin());
      }
      inst.support_masks.push_back(mask);
    }
  }
  return inst;
}

bool LcmInstance::contains(std::uint64_t value) const {
  return std::binary_search(elements.begin(), elements.end(), value);
}

bool LcmInstance::all_squarefree() const {
  for (const auto& factors : factorizations)
    for (const auto& [p, exp] : factors)
      if (exp > 1) return false;
  return true;
}

namespace {

std::vector<std::uint64_t> indices_to_values(const LcmInstance& inst,
                                             const std::vector<int>& idx) {
  std::vector<std::uint64_t> out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(inst.elements[i]);
  return out;
}

}  // namespace

std::optional<std::vector<std::uint64_t>> find_lcm_k_tuple(const LcmInstance& instance,
                                                           int k) {
  const auto& e = instance.elements;
  auto key = [&e](int a, int b) { return lcm128(e[a], e[b]); };
  auto found = detail::find_k_equal_pairs<U128>(static_cast<int>(e.size()), k, key);
  if (!found) return std::nullopt;
  return indices_to_values(instance, *found);
}

std::optional<std::vector<std::uint64_t>> find_lcm_k_tuple_naive(
    const LcmInstance& instance, int k) {
  const auto& e = instance.elements;
  auto key = [&e](int a, int b) { return lcm128(e[a], e[b]); };
  auto found = detail::find_k_equal_enum<U128>(static_cast<int>(e.size()), k, key);
  if (!found) return std::nullopt;
  return indices_to_values(instance, *found);
}

bool is_lcm_k_free(const LcmInstance& instance, int k) {
  return !find_lcm_k_tuple(instance, k).has_value();
}

namespace {

struct FkSearch {
  std::uint64_t N;
  int k;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<U128> pair_lcm;  // (N+1) x (N+1), 1-indexed by element value
  std::vector<Rat> suffix;     // suffix[a] = sum of 1/b for b in [a, N]
  std::vector<std::uint64_t> chosen;
  Rat chosen_value = 0;
  std::vector<std::uint64_t> best;
  Rat best_value = 0;

  U128 plcm(std::uint64_t a, std::uint64_t b) const {
    return pair_lcm[a * (N + 1) + b];
  }

  bool completes_tuple(std::uint64_t a) const {
    if (static_cast<int>(chosen.size()) < k - 1) return false;
    std::vector<char> used(chosen.size(), 0);
    std::vector<int> group;
    for (std::size_t i = 0; i < chosen.size(); ++i) {
      if (used[i]) continue;
      U128 v = plcm(chosen[i], a);
      group.clear();
      for (std::size_t j = i; j < chosen.size(); ++j)
        if (!used[j] && plcm(chosen[j], a) == v) {
          used[j] = 1;
          group.push_back(static_cast<int>(j));
        }
      if (static_cast<int>(group.size()) < k - 1) continue;
      if (has_clique(group, v, k - 1)) return true;
    }
    return false;
  }

  bool has_clique(const std::vector<int>& cands, U128 v, int need) const {
    if (need == 0) return true;
    for (std::size_t idx = 0; static_cast<int>(cands.size() - idx) >= need; ++idx) {
      std::vector<int> next;
      for (std::size_t j = idx + 1; j < cands.size(); ++j)
        if (plcm(chosen[cands[idx]], chosen[cands[j]]) == v) next.push_back(cands[j]);
      if (has_clique(next, v, need - 1)) return true;
    }
    return false;
  }

  void dfs(std::uint64_t a) {
    if (aborted) return;
    // exact suffix bound; <= also prunes ties once an optimum is recorded
    if (a <= N && chosen_value + suffix[a] <= best_value && !best.empty()) return;
    if (a > N) {
      if (chosen_value > best_value || best.empty()) {
        best_value = chosen_value;
        best = chosen;
      }
      return;
    }
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (!completes_tuple(a)) {
      chosen.push_back(a);
      chosen_value += Rat(1, static_cast<unsigned long>(a));
      dfs(a + 1);
      chosen_value -= Rat(1, static_cast<unsigned long>(a));
      chosen.pop_back();
    }
    dfs(a + 1);
  }
};

}  // namespace

FkResult exact_fk(std::uint64_t N, int k, std::uint64_t node_budget,
                  std::uint64_t exact_ceiling) {
  if (k < 3) throw InvalidInput("exact f_k needs k >= 3");
  if (N < 1) throw InvalidInput("exact f_k needs N >= 1");
  if (N > exact_ceiling)
    throw OutOfRangeError("N = " + std::to_string(N) + " exceeds the exact ceiling " +
                          std::to_string(exact_ceiling) +
                          " (raise the ceiling to search anyway)");
  if (N > 2048) throw ResourceLimit("exact f_k pair table capped at N <= 2048");

  FkSearch search{N, k, node_budget};
  search.pair_lcm.assign((N + 1) * (N + 1), 0);
  for (std::uint64_t a = 1; a <= N; ++a)
    for (std::uint64_t b = 1; b <= N; ++b)
      search.pair_lcm[a * (N + 1) + b] = lcm128(a, b);
  search.suffix.assign(N + 2, Rat(0));
  for (std::uint64_t a = N; a >= 1; --a)
    search.suffix[a] = search.suffix[a + 1] + Rat(1, static_cast<unsigned long>(a));
  search.dfs(1);

  FkResult result;
  result.N = N;
  result.k = k;
  result.value = search.best_value;
  result.value.canonicalize();
  result.optimal_set = search.best;
  result.exact = !search.aborted;
  result.nodes = search.nodes;
  return result;
}

namespace {

std::vector<std::uint64_t> distinct_primes_of(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = m;
  for (std::uint64_t p = 2; p * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (rest % p == 0) {
      primes.push_back(p);
      while (rest % p == 0) rest /= p;
    }
  }
  if (rest > 1) primes.push_back(rest);
  return primes;
}

}  // namespace

SetFamily representation_family(std::uint64_t m, const LcmInstance& instance, int ell) {
  if (m < 1) throw InvalidInput("representation family needs m >= 1");
  if (ell < 0) throw InvalidInput("representation family needs ell >= 0");
  std::vector<std::uint64_t> primes = distinct_primes_of(m);
  int w = static_cast<int>(primes.size());
  std::vector<std::uint64_t> members;
  if (ell <= w) {
    // enumerate ell-subsets of the prime divisors as masks
    std::vector<int> pick(ell);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::uint64_t d = 1;
      std::uint64_t mask = 0;
      for (int i : pick) {
        d *= primes[i];
        mask |= std::uint64_t{1} << i;
      }
      if (instance.contains(m / d)) members.push_back(mask);
      // next combination
      int i = ell - 1;
      while (i >= 0 && pick[i] == w - ell + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < ell; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return SetFamily::from_members(w, std::move(members), std::move(primes));
}

std::size_t representation_count(std::uint64_t m, const LcmInstance& instance, int ell) {
  return representation_family(m, instance, ell).size();
}

SetFamily support_family(const LcmInstance& instance) {
  for (std::size_t i = 0; i < instance.elements.size(); ++i)
    for (const auto& [p, exp] : instance.factorizations[i])
      if (exp > 1)
        throw InvalidInput("support family needs squarefree elements; " +
                           std::to_string(instance.elements[i]) + " is divisible by " +
                           std::to_string(p) + "^2");
  if (instance.occurring_primes.size() > 64)
    throw GroundSetOverflow("support family needs at most 64 occurring primes, got " +
                            std::to_string(instance.occurring_primes.size()));
  return SetFamily::from_members(static_cast<int>(instance.occurring_primes.size()),
                                 instance.support_masks, instance.occurring_primes);
}

}  // namespace lcmcap
