#include "lcmcap/primes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lcmcap/errors.hpp"
#include "lcmcap/kahan.hpp"

namespace lcmcap {

PrimeTable PrimeTable::sieve(std::uint64_t limit, std::uint64_t max_limit) {
  if (limit > max_limit)
    throw ResourceLimit("sieve limit " + std::to_string(limit) +
                        " exceeds configured memory budget (max " +
                        std::to_string(max_limit) + ")");
  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;

  // one bit per odd number; even numbers handled separately
  std::uint64_t n_odd = (limit + 1) / 2;  // odds in [1, limit]
  std::vector<std::uint64_t> composite((n_odd + 63) / 64, 0);
  auto mark = [&](std::uint64_t idx) { composite[idx >> 6] |= 1ull << (idx & 63); };
  auto marked = [&](std::uint64_t idx) {
    return (composite[idx >> 6] >> (idx & 63)) & 1;
  };
  mark(0);  // 1 is not prime
  for (std::uint64_t p = 3; p * p <= limit; p += 2) {
    if (marked(p >> 1)) continue;
    for (std::uint64_t m = p * p; m <= limit; m += 2 * p) mark(m >> 1);
  }
  table.primes.push_back(2);
  for (std::uint64_t i = 1; i < n_odd; ++i)
    if (!marked(i)) table.primes.push_back(2 * i + 1);
  return table;
}

std::int64_t PrimeTable::ordinal_of(std::uint64_t p) const {
  auto it = std::lower_bound(primes.begin(), primes.end(), p);
  if (it == primes.end() || *it != p) return -1;
  return it - primes.begin();
}

namespace {

// iterator range of primes in (lo, hi] (or [lo, hi] when closed_left)
std::pair<std::vector<std::uint64_t>::const_iterator,
          std::vector<std::uint64_t>::const_iterator>
prime_range(const PrimeTable& table, double lo, double hi, bool closed_left) {
  if (lo > hi) throw InvalidInput("prime range has lo > hi");
  if (hi > static_cast<double>(table.limit))
    throw OutOfRangeError("prime range upper end " + std::to_string(hi) +
                          " exceeds table limit " + std::to_string(table.limit));
  auto cmp = [](std::uint64_t p, double x) { return static_cast<double>(p) < x; };
  auto first = std::lower_bound(table.primes.begin(), table.primes.end(), lo, cmp);
  if (!closed_left)
    while (first != table.primes.end() && static_cast<double>(*first) <= lo) ++first;
  auto last = std::lower_bound(first, table.primes.end(), hi, cmp);
  while (last != table.primes.end() && static_cast<double>(*last) <= hi) ++last;
  return {first, last};
}

}  // namespace

std::vector<std::uint64_t> PrimeTable::primes_in(double lo, double hi,
                                                 bool closed_left) const {
  auto [first, last] = prime_range(*this, lo, hi, closed_left);
  return {first, last};
}

Rat prime_harmonic_sum_exact(const PrimeTable& table, double lo, double hi) {
  auto [first, last] = prime_range(table, lo, hi, false);
  Rat sum = 0;
  for (auto it = first; it != last; ++it) sum += Rat(1, static_cast<unsigned long>(*it));
  sum.canonicalize();
  return sum;
}

double prime_harmonic_sum(const PrimeTable& table, double lo, double hi) {
  auto [first, last] = prime_range(table, lo, hi, false);
  KahanSum acc;
  for (auto it = first; it != last; ++it) acc.add(1.0 / static_cast<double>(*it));
  return acc.value();
}

double prime_log_sum(const PrimeTable& table, double hi) {
  auto [first, last] = prime_range(table, 0.0, hi, false);
  KahanSum acc;
  for (auto it = first; it != last; ++it) {
    double p = static_cast<double>(*it);
    acc.add(std::log(p) / p);
  }
  return acc.value();
}

}  // namespace lcmcap
