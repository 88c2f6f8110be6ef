#include "lcmcap/capacity.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "lcmcap/errors.hpp"

namespace lcmcap {

namespace {

// Does adding `s` to `chosen` complete a k-tuple with constant pairwise
// combination value? Partition chosen by op(c, s); a completed tuple is a
// (k-1)-clique under op == that value inside one part.
template <typename Op>
bool completes_tuple(const std::vector<std::uint64_t>& chosen, std::uint64_t s, int k,
                     Op op) {
  if (static_cast<int>(chosen.size()) < k - 1) return false;
  std::vector<char> used(chosen.size(), 0);
  std::vector<int> group;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (used[i]) continue;
    std::uint64_t v = op(chosen[i], s);
    group.clear();
    for (std::size_t j = i; j < chosen.size(); ++j)
      if (!used[j] && op(chosen[j], s) == v) {
        used[j] = 1;
        group.push_back(static_cast<int>(j));
      }
    if (static_cast<int>(group.size()) < k - 1) continue;
    // search a (k-1)-clique in the group (all pairwise op-values == v)
    struct Dfs {
      const std::vector<std::uint64_t>& chosen;
      std::uint64_t v;
      Op op;
      int need;
      bool run(const std::vector<int>& cs, std::vector<int>& cur) {
        if (static_cast<int>(cur.size()) == need) return true;
        int want = need - static_cast<int>(cur.size());
        for (std::size_t idx = 0; static_cast<int>(cs.size() - idx) >= want; ++idx) {
          int cand = cs[idx];
          cur.push_back(cand);
          std::vector<int> next;
          for (std::size_t j = idx + 1; j < cs.size(); ++j)
            if (op(chosen[cand], chosen[cs[j]]) == v) next.push_back(cs[j]);
          if (run(next, cur)) return true;
          cur.pop_back();
        }
        return false;
      }
    } dfs{chosen, v, op, k - 1};
    std::vector<int> cur;
    if (dfs.run(group, cur)) return true;
  }
  return false;
}

template <typename Op>
struct Search {
  std::vector<std::uint64_t> cands;  // candidate order for the optimizing pass
  int k;
  Op op;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool aborted = false;
  std::vector<std::uint64_t> chosen;
  std::vector<std::uint64_t> best;
  bool symmetry_root;

  void dfs(std::size_t idx) {
    if (aborted) return;
    if (chosen.size() + (cands.size() - idx) <= best.size()) return;
    if (idx == cands.size()) {
      best = chosen;  // strictly larger by the prune above
      return;
    }
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    std::uint64_t s = cands[idx];
    bool root_ok = true;
    if (symmetry_root && chosen.empty()) {
      // the first included set can be assumed canonical in its orbit under
      // ground permutations: the low-bits mask of its popcount
      int pc = std::popcount(s);
      root_ok = s == ((pc == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << pc) - 1);
    }
    if (root_ok && !completes_tuple(chosen, s, k, op)) {
      chosen.push_back(s);
      // anytime incumbent: a free prefix is already a valid family, so a
      // budget abort still reports the best one seen as a lower bound
      if (chosen.size() > best.size()) best = chosen;
      dfs(idx + 1);
      chosen.pop_back();
    }
    dfs(idx + 1);
  }

  // Lexicographically smallest family of exactly `target` members, candidates
  // scanned in ascending mask order, include-first: the first hit is it.
  bool sweep_found = false;
  std::vector<std::uint64_t> sweep_best;

  void sweep(const std::vector<std::uint64_t>& order, std::size_t idx,
             std::size_t target) {
    if (sweep_found || aborted) return;
    if (chosen.size() == target) {
      sweep_best = chosen;
      sweep_found = true;
      return;
    }
    if (chosen.size() + (order.size() - idx) < target) return;
    if (++nodes > budget) {
      aborted = true;
      return;
    }
    if (!completes_tuple(chosen, order[idx], k, op)) {
      chosen.push_back(order[idx]);
      sweep(order, idx + 1, target);
      if (sweep_found) return;
      chosen.pop_back();
    }
    sweep(order, idx + 1, target);
  }
};

template <typename Op>
CapacityResult run_capacity_search(int n, int k, std::uint64_t node_budget, Op op) {
  if (k < 3) throw InvalidInput("capacity search needs k >= 3");
  if (n < 0) throw InvalidInput("capacity search needs n >= 0");
  if (n > 20)
    throw ResourceLimit("capacity search with n > 20 would enumerate 2^n > 10^6 "
                        "candidate sets");

  std::vector<std::uint64_t> by_value(std::size_t{1} << n);
  std::iota(by_value.begin(), by_value.end(), 0);
  std::vector<std::uint64_t> by_layer = by_value;
  std::stable_sort(by_layer.begin(), by_layer.end(),
                   [](std::uint64_t a, std::uint64_t b) {
                     return std::popcount(a) < std::popcount(b);
                   });

  Search<Op> search{by_layer, k, op, node_budget};
  search.symmetry_root = true;
  search.dfs(0);

  CapacityResult result;
  result.n = n;
  result.k = k;
  result.F = static_cast<int>(search.best.size());
  result.exact = !search.aborted;

  // deterministic final sweep: rebuild the witness as the lexicographically
  // smallest family achieving the optimum
  search.chosen.clear();
  search.sweep(by_value, 0, search.best.size());
  std::vector<std::uint64_t> witness =
      search.sweep_found ? search.sweep_best : search.best;
  result.witness = SetFamily::from_members(n, std::move(witness));
  result.nodes = search.nodes;
  if (search.aborted) result.exact = false;
  return result;
}

}  // namespace

CapacityResult max_sunflower_free(int n, int k, std::uint64_t node_budget) {
  return run_capacity_search(n, k, node_budget,
                             [](std::uint64_t a, std::uint64_t b) { return a & b; });
}

CapacityResult max_cosunflower_free(int n, int k, std::uint64_t node_budget) {
  return run_capacity_search(n, k, node_budget,
                             [](std::uint64_t a, std::uint64_t b) { return a | b; });
}

double capacity_lower_estimate(const CapacityResult& result) {
  if (result.n < 1)
    throw MathDomainError("capacity estimate needs n >= 1 (no 1/n power at n = 0)");
  if (result.F < 1) throw MathDomainError("capacity estimate needs F >= 1");
  double n = result.n;
  return std::exp((std::log(static_cast<double>(result.F)) - std::log(n + 1.0)) / n);
}

BoundEntry known_bounds(int k) {
  if (k < 3) throw InvalidInput("capacity bounds are defined for k >= 3");
  BoundEntry entry;
  entry.k = k;
  entry.lower = 1.0;
  entry.lower_source = "trivial";
  entry.upper = 2.0;
  entry.upper_source = "trivial (all families)";
  if (k == 3) {
    entry.lower = 1.551;
    entry.lower_source = "Deuber-Erdos-Gunderson-Kostochka-Meyer construction";
    entry.upper = 3.0 / std::pow(2.0, 2.0 / 3.0);  // = 1.889881574...
    entry.upper_source = "Naslund-Sawin";
  }
  return entry;
}

}  // namespace lcmcap
