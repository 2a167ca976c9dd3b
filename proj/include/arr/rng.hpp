#pragma once

#include <cstdint>

#include "arr/rational.hpp"

namespace arr {

// splitmix64: tiny, deterministic across platforms, good enough for picking
// random rational test points.
class Rng {
  std::uint64_t s_;

 public:
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ULL) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // small nonzero rational, suitable as a generic evaluation point
  Rat rat(long bound = 1000) {
    long num = static_cast<long>(below(2 * static_cast<std::uint64_t>(bound))) - bound;
    if (num == 0) num = 1;
    long den = static_cast<long>(below(static_cast<std::uint64_t>(bound))) + 1;
    return Rat(num, den);
  }

  long integer(long lo, long hi) {  // inclusive range
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

}  // namespace arr
