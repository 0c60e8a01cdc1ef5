#include "tincell/random.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tincell {

namespace {

void require_interval(const Interval& iv, const char* name) {
  if (!(std::isfinite(iv.lo) && std::isfinite(iv.hi)) || iv.lo < 0.0 || iv.lo > iv.hi)
    throw std::invalid_argument(std::string(name) + " interval must satisfy 0 <= lo <= hi < inf");
}

}  // namespace

NetworkProfile random_profile(int cells, Interval direct, Interval cross,
                              std::uint64_t seed) {
  require_interval(direct, "direct");
  require_interval(cross, "cross");
  NetworkProfile p(cells);
  Rng rng(seed);
  for (int k = 0; k < cells; ++k) {
    double a = rng.uniform(direct.lo, direct.hi);
    double b = rng.uniform(direct.lo, direct.hi);
    if (a > b) std::swap(a, b);
    p.alpha(k, 0, k) = a;
    p.alpha(k, 1, k) = b;
    for (int j = 0; j < cells; ++j) {
      if (j == k) continue;
      p.alpha(k, 0, j) = rng.uniform(cross.lo, cross.hi);
      p.alpha(k, 1, j) = rng.uniform(cross.lo, cross.hi);
    }
  }
  return p;
}

}  // namespace tincell
