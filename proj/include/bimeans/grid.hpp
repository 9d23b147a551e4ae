#pragma once

// Deterministic evaluation grids on the ratio axis x = b/a in (0,1).

#include "bimeans/real.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace bimeans {

struct GridSpec {
  int points = 10000;   // total size (>= 64)
  double edge = 1e-8;   // smallest ratio sampled
};

// Log-spaced points from edge up to (but excluding) 1/2, plus their mirror
// images 1-x, so the sampling clusters at both endpoints.  The lower half
// stays strictly below 1/2, which makes the result collision-free: the grid
// has exactly spec.points entries (an odd count adds the midpoint 1/2).
inline std::vector<BigFloat> make_ratio_grid(const GridSpec& spec) {
  if (spec.points < 64) throw std::invalid_argument("grid needs at least 64 points");
  if (!(spec.edge > 0 && spec.edge < 0.5)) throw std::invalid_argument("grid edge must be in (0, 1/2)");
  const int half = spec.points / 2;
  const BigFloat l_lo = log(BigFloat(spec.edge));
  const BigFloat l_hi = log(BigFloat(1) / 2);
  std::vector<BigFloat> xs;
  xs.reserve(static_cast<std::size_t>(spec.points));
  for (int i = 0; i < half; ++i) {
    const BigFloat x = exp(l_lo + (l_hi - l_lo) * i / half);
    xs.push_back(x);
    xs.push_back(1 - x);
  }
  if (spec.points % 2 != 0) xs.push_back(BigFloat(1) / 2);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace bimeans
