#pragma once

#include <cstdint>
#include <random>

#include "tincell/model.hpp"

namespace tincell {

// mt19937_64 with a hand-rolled 53-bit uniform, so sequences are identical
// across platforms and standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  // Small-range draw for enumerable choices. Modulo bias is negligible at
  // the ranges used here; determinism is what matters.
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

 private:
  std::mt19937_64 eng_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// Random normalized profile. Direct-link pairs are drawn from `direct` and
// sorted so the weaker link is user 1; cross links are drawn from `cross`.
// Both intervals require 0 <= lo <= hi < inf. The draw sequence is fixed:
// per cell, the direct pair first, then cross entries by source cell
// (ascending), user 1 before user 2.
NetworkProfile random_profile(int cells, Interval direct, Interval cross,
                              std::uint64_t seed);

}  // namespace tincell
