#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lcmcap {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed arguments: duplicate sets, bad ground sizes, weights outside [0,1], ...
struct InvalidInput : Error {
  using Error::Error;
};

// Argument outside a configured range (sieve limit, exact-mode ceiling, ...).
struct OutOfRangeError : Error {
  using Error::Error;
};

// A configured resource cap would be exceeded (memory budget, materialization cap).
struct ResourceLimit : Error {
  using Error::Error;
};

// Mathematically undefined request (e.g. G(z) at z >= 2, estimate at n = 0).
struct MathDomainError : Error {
  using Error::Error;
};

// A set-family operation would need more than 64 ground elements.
struct GroundSetOverflow : Error {
  using Error::Error;
};

// Greedy bucketing could not complete the requested number of blocks.
struct BucketShortfall : Error {
  BucketShortfall(const std::string& msg, std::size_t completed_blocks)
      : Error(msg), completed(completed_blocks) {}
  std::size_t completed;
};

}  // namespace lcmcap
