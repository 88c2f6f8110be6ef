#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcmcap/primes.hpp"
#include "lcmcap/rat.hpp"

namespace lcmcap {

inline constexpr std::uint64_t kDefaultOmegaCap = 100'000'000;
inline constexpr std::uint64_t kExactHarmonicCap = 100'000;

// Distinct-prime-factor counts and squarefree flags for every n <= limit,
// built by an additive sieve. Counts are nibble-packed (two per byte), so the
// whole table costs about 0.625 bytes per integer.
class OmegaSieve {
 public:
  explicit OmegaSieve(std::uint64_t limit, std::uint64_t cap = kDefaultOmegaCap);

  std::uint64_t limit() const { return limit_; }
  int omega(std::uint64_t n) const;        // number of distinct prime factors
  bool squarefree(std::uint64_t n) const;  // no repeated prime factor

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> counts_;   // two nibbles per byte
  std::vector<std::uint64_t> sf_bits_; // bit n set <=> n squarefree
};

// A range sum with its parameters: exact value when the range allows it,
// compensated float always, and the number of contributing integers.
struct HarmonicLedger {
  std::uint64_t bound = 0;
  int ell = 0;
  std::optional<Rat> exact;
  double value = 0;
  std::uint64_t terms = 0;
};

enum class SumMode { kAuto, kExact, kFloat };

// Sum of 1/n over squarefree n <= N with exactly ell distinct prime factors.
// Exact mode needs N <= kExactHarmonicCap (denominator growth); kAuto picks
// exact when the range allows it. Requires N <= sieve.limit().
HarmonicLedger h_ell(const OmegaSieve& sieve, std::uint64_t N, int ell,
                     SumMode mode = SumMode::kAuto);

// Count of squarefree n <= x with exactly ell distinct prime factors.
std::uint64_t a_ell(const OmegaSieve& sieve, std::uint64_t x, int ell);

// Sum of z^omega(m)/m over all m <= X (compensated float).
double z_omega_sum(const OmegaSieve& sieve, std::uint64_t X, double z);

// The finite Euler product prod_{p <= X} (1 + z/(p-1)), an upper bound for
// z_omega_sum at the same X.
double euler_majorant(const PrimeTable& table, std::uint64_t X, double z);

// Truncated Euler-product constant with a rigorous truncation error.
struct TruncatedConstant {
  double value = 0;       // the truncated product
  double tail_bound = 0;  // |true value - value| is at most this
  double z = 0;
  std::uint64_t cutoff = 0;
};

// G(z) = (1/Gamma(1+z)) * prod_p (1 + z/p)(1 - 1/p)^z, truncated at
// p <= cutoff. Defined for 0 <= z < 2 (MathDomainError outside). Each omitted
// log-factor is bounded by z(z+1)/p^2, so the tail of the log sum is below
// z(z+1)/cutoff.
TruncatedConstant g_constant(const PrimeTable& table, double z,
                             std::uint64_t cutoff = 1'000'000);

// Predicted count of squarefree integers <= x with exactly ell prime factors:
// G((ell-1)/log log x) * (x/log x) * (log log x)^(ell-1)/(ell-1)!.
double sathe_selberg_main_term(const PrimeTable& table, std::uint64_t x, int ell,
                               std::uint64_t cutoff = 1'000'000);

// CSV rows "N,ell,exact,float,target,ratio" where target = (log log N)^ell/ell!
// and ratio = float/target, one row per (N, ell) pair, with a header line.
std::string harmonic_trend_csv(const OmegaSieve& sieve,
                               const std::vector<std::uint64_t>& Ns,
                               const std::vector<int>& ells);

}  // namespace lcmcap
