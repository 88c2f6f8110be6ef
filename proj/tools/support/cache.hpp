#pragma once

#include <cstdint>

#include "lcmcap/primes.hpp"

namespace lcmcap {

// Builds (or reloads) the prime table up to `limit`. When the LCMCAP_CACHE_DIR
// environment variable names a directory, sieved tables are stored there as
// binary files and reused across runs; without it this is PrimeTable::sieve.
// Cache IO failures fall back to sieving silently — the cache is best-effort.
PrimeTable cached_prime_table(std::uint64_t limit,
                              std::uint64_t max_limit = kDefaultSieveCap);

}  // namespace lcmcap
