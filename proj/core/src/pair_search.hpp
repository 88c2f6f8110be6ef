#pragma once

// Internal (not installed): shared machinery for "find k items whose pairwise
// combination value is constant" searches. Used for k-sunflowers (pairwise
// intersections), k-cosunflowers (pairwise unions) and LCM-k-tuples (pairwise
// lcm values). Two interchangeable strategies:
//   find_k_equal_pairs — anchor each index i, group partners j > i by the pair
//     key, then hunt a (k-1)-clique inside any group that is large enough;
//   find_k_equal_enum  — pruned k-subset enumeration (the cross-check oracle).
// Both return the lexicographically smallest ascending index tuple.

#include <cstdint>
#include <optional>
#include <vector>

#include "lcmcap/errors.hpp"

namespace lcmcap::detail {

inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

inline std::uint64_t hash_key(std::uint64_t k) { return mix64(k); }
inline std::uint64_t hash_key(unsigned __int128 k) {
  return mix64(static_cast<std::uint64_t>(k) ^
               mix64(static_cast<std::uint64_t>(k >> 64)));
}

// Open-addressing grouper reused across anchors: maps a key to the chain of
// partner slots that produced it (chained through next_, LIFO).
template <typename Key>
class PairGrouper {
 public:
  void reset(std::size_t n_partners) {
    std::size_t want = 4;
    while (want < 2 * n_partners + 2) want <<= 1;
    if (keys_.size() < want) {
      keys_.assign(want, Key{});
      head_.assign(want, -1);
      stamp_.assign(want, 0);
    }
    mask_ = keys_.size() - 1;
    if (next_.size() < n_partners) next_.resize(n_partners);
    ++epoch_;
    touched_.clear();
  }

  void insert(Key key, int slot) {
    std::size_t h = hash_key(key) & mask_;
    while (true) {
      if (stamp_[h] != epoch_) {
        stamp_[h] = epoch_;
        keys_[h] = key;
        head_[h] = slot;
        next_[slot] = -1;
        touched_.push_back(h);
        return;
      }
      if (keys_[h] == key) {
        next_[slot] = head_[h];
        head_[h] = slot;
        return;
      }
      h = (h + 1) & mask_;
    }
  }

  const std::vector<std::size_t>& touched() const { return touched_; }
  Key key_at(std::size_t slot) const { return keys_[slot]; }
  int head_at(std::size_t slot) const { return head_[slot]; }
  int next_of(int chain_slot) const { return next_[chain_slot]; }

 private:
  std::vector<Key> keys_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::size_t> touched_;
  std::size_t mask_ = 3;
  std::uint32_t epoch_ = 0;
};

// Lexicographically smallest clique of `need` vertices from `cands` (ascending)
// where u,v are adjacent iff pair_key(u, v) == key. First DFS hit is it.
template <typename Key, typename PairKeyFn>
bool clique_dfs(const std::vector<int>& cands, Key key, int need, PairKeyFn&& pair_key,
                std::vector<int>& out) {
  if (need == 0) return true;
  if (static_cast<int>(cands.size()) < need) return false;
  std::vector<int> filtered;
  for (std::size_t idx = 0; static_cast<int>(cands.size() - idx) >= need; ++idx) {
    int v = cands[idx];
    out.push_back(v);
    if (need == 1) return true;
    filtered.clear();
    for (std::size_t j = idx + 1; j < cands.size(); ++j)
      if (pair_key(v, cands[j]) == key) filtered.push_back(cands[j]);
    if (clique_dfs(filtered, key, need - 1, pair_key, out)) return true;
    out.pop_back();
  }
  return false;
}

template <typename Key, typename PairKeyFn>
std::optional<std::vector<int>> find_k_equal_pairs(int n, int k, PairKeyFn&& pair_key) {
  if (k < 3) throw InvalidInput("tuple search needs k >= 3");
  if (n < k) return std::nullopt;
  PairGrouper<Key> grouper;
  std::vector<int> group, chosen, best;
  for (int i = 0; i + k <= n; ++i) {
    grouper.reset(static_cast<std::size_t>(n - i - 1));
    for (int j = i + 1; j < n; ++j) grouper.insert(pair_key(i, j), j - i - 1);
    best.clear();
    for (std::size_t slot : grouper.touched()) {
      group.clear();
      for (int c = grouper.head_at(slot); c >= 0; c = grouper.next_of(c))
        group.push_back(c + i + 1);
      if (static_cast<int>(group.size()) < k - 1) continue;
      std::reverse(group.begin(), group.end());  // chains are LIFO
      Key key = grouper.key_at(slot);
      chosen.clear();
      if (clique_dfs(group, key, k - 1, pair_key, chosen)) {
        std::vector<int> tuple;
        tuple.reserve(static_cast<std::size_t>(k));
        tuple.push_back(i);
        tuple.insert(tuple.end(), chosen.begin(), chosen.end());
        if (best.empty() || tuple < best) best = tuple;
      }
    }
    // any witness from a later anchor starts with a larger first index
    if (!best.empty()) return best;
  }
  return std::nullopt;
}

template <typename Key, typename PairKeyFn>
bool enum_dfs(int n, int k, PairKeyFn&& pair_key, std::vector<int>& prefix, Key key,
              int from, std::vector<int>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out = prefix;
    return true;
  }
  int need = k - static_cast<int>(prefix.size());
  for (int v = from; v + need <= n; ++v) {
    Key next_key = key;
    bool ok = true;
    if (prefix.size() >= 2) {
      for (int c : prefix)
        if (pair_key(c, v) != key) {
          ok = false;
          break;
        }
    } else if (prefix.size() == 1) {
      next_key = pair_key(prefix[0], v);
    }
    if (!ok) continue;
    prefix.push_back(v);
    if (enum_dfs(n, k, pair_key, prefix, next_key, v + 1, out)) return true;
    prefix.pop_back();
  }
  return false;
}

template <typename Key, typename PairKeyFn>
std::optional<std::vector<int>> find_k_equal_enum(int n, int k, PairKeyFn&& pair_key) {
  if (k < 3) throw InvalidInput("tuple search needs k >= 3");
  std::vector<int> prefix, out;
  if (enum_dfs(n, k, pair_key, prefix, Key{}, 0, out)) return out;
  return std::nullopt;
}

}  // namespace lcmcap::detail
