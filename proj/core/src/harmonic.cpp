#include "lcmcap/harmonic.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "lcmcap/errors.hpp"
#include "lcmcap/kahan.hpp"

namespace lcmcap {

OmegaSieve::OmegaSieve(std::uint64_t limit, std::uint64_t cap) : limit_(limit) {
  if (limit < 1) throw InvalidInput("sieve limit must be >= 1");
  if (limit > cap)
    throw ResourceLimit("sieve limit " + std::to_string(limit) +
                        " exceeds the cap " + std::to_string(cap));
  counts_.assign(limit / 2 + 1, 0);
  sf_bits_.assign(limit / 64 + 1, ~std::uint64_t{0});

  auto bump = [this](std::uint64_t n) {
    counts_[n >> 1] += (n & 1) ? std::uint8_t{16} : std::uint8_t{1};
  };
  for (std::uint64_t p = 2; p <= limit_; ++p) {
    if (omega(p) != 0) continue;  // some smaller prime already divides p
    for (std::uint64_t m = p; m <= limit_; m += p) bump(m);
    if (p <= limit_ / p) {
      const std::uint64_t sq = p * p;
      for (std::uint64_t m = sq; m <= limit_; m += sq)
        sf_bits_[m >> 6] &= ~(std::uint64_t{1} << (m & 63));
    }
  }
}

int OmegaSieve::omega(std::uint64_t n) const {
  if (n < 1 || n > limit_)
    throw OutOfRangeError("omega query " + std::to_string(n) +
                          " outside the sieved range");
  const std::uint8_t byte = counts_[n >> 1];
  return (n & 1) ? byte >> 4 : byte & 15;
}

bool OmegaSieve::squarefree(std::uint64_t n) const {
  if (n < 1 || n > limit_)
    throw OutOfRangeError("squarefree query " + std::to_string(n) +
                          " outside the sieved range");
  return sf_bits_[n >> 6] >> (n & 63) & 1;
}

namespace {

// Pairwise reduction keeps intermediate denominators balanced.
Rat tree_sum(std::vector<Rat> terms) {
  if (terms.empty()) return Rat(0);
  while (terms.size() > 1) {
    std::size_t out = 0;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2)
      terms[out++] = terms[i] + terms[i + 1];
    if (terms.size() & 1) terms[out++] = terms.back();
    terms.resize(out);
  }
  return terms[0];
}

}  // namespace

HarmonicLedger h_ell(const OmegaSieve& sieve, std::uint64_t N, int ell, SumMode mode) {
  if (N < 1) throw InvalidInput("range bound must be >= 1");
  if (ell < 0) throw InvalidInput("factor count must be >= 0");
  if (N > sieve.limit())
    throw OutOfRangeError("range bound " + std::to_string(N) +
                          " exceeds the sieved limit " +
                          std::to_string(sieve.limit()));
  const bool want_exact =
      mode == SumMode::kExact || (mode == SumMode::kAuto && N <= kExactHarmonicCap);
  if (mode == SumMode::kExact && N > kExactHarmonicCap)
    throw ResourceLimit("exact mode capped at N <= " +
                        std::to_string(kExactHarmonicCap));

  HarmonicLedger ledger;
  ledger.bound = N;
  ledger.ell = ell;
  KahanSum sum;
  std::vector<Rat> terms;
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (!sieve.squarefree(n) || sieve.omega(n) != ell) continue;
    ++ledger.terms;
    sum.add(1.0 / static_cast<double>(n));
    if (want_exact) terms.emplace_back(1, static_cast<unsigned long>(n));
  }
  ledger.value = sum.value();
  if (want_exact) ledger.exact = tree_sum(std::move(terms));
  return ledger;
}

std::uint64_t a_ell(const OmegaSieve& sieve, std::uint64_t x, int ell) {
  if (x < 1) throw InvalidInput("range bound must be >= 1");
  if (ell < 0) throw InvalidInput("factor count must be >= 0");
  if (x > sieve.limit())
    throw OutOfRangeError("range bound " + std::to_string(x) +
                          " exceeds the sieved limit " +
                          std::to_string(sieve.limit()));
  std::uint64_t count = 0;
  for (std::uint64_t n = 1; n <= x; ++n)
    if (sieve.squarefree(n) && sieve.omega(n) == ell) ++count;
  return count;
}

double z_omega_sum(const OmegaSieve& sieve, std::uint64_t X, double z) {
  if (z <= 0) throw InvalidInput("weight z must be positive");
  if (X < 1) throw InvalidInput("range bound must be >= 1");
  if (X > sieve.limit())
    throw OutOfRangeError("range bound " + std::to_string(X) +
                          " exceeds the sieved limit " +
                          std::to_string(sieve.limit()));
  double powers[16];
  powers[0] = 1;
  for (int j = 1; j < 16; ++j) powers[j] = powers[j - 1] * z;
  KahanSum sum;
  for (std::uint64_t m = 1; m <= X; ++m)
    sum.add(powers[sieve.omega(m)] / static_cast<double>(m));
  return sum.value();
}

double euler_majorant(const PrimeTable& table, std::uint64_t X, double z) {
  if (z <= 0) throw InvalidInput("weight z must be positive");
  if (X > table.limit)
    throw OutOfRangeError("range bound " + std::to_string(X) +
                          " exceeds the prime table limit " +
                          std::to_string(table.limit));
  KahanSum log_sum;
  for (std::uint64_t p : table.primes) {
    if (p > X) break;
    log_sum.add(std::log1p(z / static_cast<double>(p - 1)));
  }
  return std::exp(log_sum.value());
}

TruncatedConstant g_constant(const PrimeTable& table, double z, std::uint64_t cutoff) {
  if (z < 0 || z >= 2)
    throw MathDomainError("constant defined on 0 <= z < 2, got " + std::to_string(z));
  if (cutoff < 2) throw InvalidInput("prime cutoff must be >= 2");
  if (cutoff > table.limit)
    throw OutOfRangeError("prime cutoff " + std::to_string(cutoff) +
                          " exceeds the prime table limit " +
                          std::to_string(table.limit));
  KahanSum log_sum;
  for (std::uint64_t p : table.primes) {
    if (p > cutoff) break;
    const double pd = static_cast<double>(p);
    log_sum.add(std::log1p(z / pd) + z * std::log1p(-1.0 / pd));
  }
  TruncatedConstant out;
  out.z = z;
  out.cutoff = cutoff;
  out.value = std::exp(log_sum.value()) / std::tgamma(1.0 + z);
  const double log_tail = z * (z + 1) / static_cast<double>(cutoff);
  out.tail_bound = out.value * std::expm1(log_tail);
  return out;
}

double sathe_selberg_main_term(const PrimeTable& table, std::uint64_t x, int ell,
                               std::uint64_t cutoff) {
  if (ell < 1) throw InvalidInput("factor count must be >= 1");
  if (x < 3) throw InvalidInput("range bound must be >= 3");
  const double lx = std::log(static_cast<double>(x));
  const double llx = std::log(lx);
  const double z = (ell - 1) / llx;
  if (z >= 2)
    throw MathDomainError("(ell-1)/log log x = " + std::to_string(z) +
                          " leaves the [0, 2) domain of the constant");
  const TruncatedConstant g = g_constant(table, z, cutoff);
  return g.value * (static_cast<double>(x) / lx) *
         std::exp((ell - 1) * std::log(llx) - std::lgamma(static_cast<double>(ell)));
}

std::string harmonic_trend_csv(const OmegaSieve& sieve,
                               const std::vector<std::uint64_t>& Ns,
                               const std::vector<int>& ells) {
  // Exact rationals stay readable only for short ranges; beyond that the
  // column is left blank and the float column carries the trend.
  constexpr std::uint64_t kExactColumnCap = 1000;
  std::string csv = "N,ell,exact,float,target,ratio\n";
  char buf[96];
  for (std::uint64_t N : Ns) {
    if (N < 3) throw InvalidInput("trend rows need N >= 3");
    const double llN = std::log(std::log(static_cast<double>(N)));
    for (int ell : ells) {
      const HarmonicLedger ledger =
          h_ell(sieve, N, ell,
                N <= kExactColumnCap ? SumMode::kAuto : SumMode::kFloat);
      const double target = std::exp(ell * std::log(llN) - std::lgamma(ell + 1.0));
      csv += std::to_string(N);
      csv += ',';
      csv += std::to_string(ell);
      csv += ',';
      if (ledger.exact) csv += rat_str(*ledger.exact);
      std::snprintf(buf, sizeof buf, ",%.12g,%.12g,%.12g\n", ledger.value, target,
                    ledger.value / target);
      csv += buf;
    }
  }
  return csv;
}

}  // namespace lcmcap
