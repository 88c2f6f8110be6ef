#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lcmcap {

// Exact arithmetic used everywhere a result is contractually exact.
// GMP's canonical forms guarantee that equal rationals compare equal.
using Int = mpz_class;
using Rat = mpq_class;

// Canonical "p/q" string; integers print without the "/q" part.
std::string rat_str(const Rat& r);
std::string int_str(const Int& n);

// Parses "p/q", plain integers, and decimal literals like "0.25" (exactly).
Rat rat_parse(std::string_view text);

inline double rat_double(const Rat& r) { return r.get_d(); }

inline Rat rat_inv_u64(unsigned long n) { return Rat(1, n); }

}  // namespace lcmcap
