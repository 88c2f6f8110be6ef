#pragma once

#include <cstdint>
#include <vector>

#include "lcmcap/rat.hpp"

namespace lcmcap {

inline constexpr std::uint64_t kDefaultSieveCap = 100'000'000;

// Ascending table of all primes <= limit, bit-packed Eratosthenes underneath.
// Ordinals double as bitmask positions for squarefree supports.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  // Sieves [2, limit]. Limits beyond max_limit raise ResourceLimit (memory budget).
  static PrimeTable sieve(std::uint64_t limit, std::uint64_t max_limit = kDefaultSieveCap);

  // Ordinal of p in the table, or -1 if p is not a listed prime.
  std::int64_t ordinal_of(std::uint64_t p) const;
  bool is_prime(std::uint64_t n) const { return ordinal_of(n) >= 0; }

  // All primes p with lo < p <= hi (half-open), or y <= p <= x when closed_left.
  std::vector<std::uint64_t> primes_in(double lo, double hi, bool closed_left = false) const;
};

// Sum of 1/p over primes lo < p <= hi, exact rational. Requires hi <= table.limit.
Rat prime_harmonic_sum_exact(const PrimeTable& table, double lo, double hi);

// Same sum in compensated floating point.
double prime_harmonic_sum(const PrimeTable& table, double lo, double hi);

// Sum of log(p)/p over primes p <= hi, compensated floating point.
double prime_log_sum(const PrimeTable& table, double hi);

}  // namespace lcmcap
