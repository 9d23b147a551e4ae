#pragma once

// Richardson/Neville extrapolation of sampled limits.

#include "bimeans/real.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace bimeans {

template <class Real>
struct Extrapolated {
  Real value;
  Real error_estimate;
};

// Neville polynomial extrapolation of the samples (nodes[i], values[i]) to
// node -> 0.  Nodes must be nonzero and pairwise distinct; geometric node
// sequences (h, h/2, h/4, ...) give the classic Richardson behaviour.  The
// error estimate is the defect between the two highest-order estimates and is
// trustworthy when the sampled function is smooth in the node variable.
template <class Real>
Extrapolated<Real> extrapolate_to_zero(const std::vector<Real>& nodes,
                                       const std::vector<Real>& values) {
  using std::fabs;
  const std::size_t n = nodes.size();
  if (values.size() != n || n < 2)
    throw std::invalid_argument("extrapolate_to_zero: need matching lists with >= 2 samples");
  std::vector<Real> p = values;
  for (std::size_t j = 1; j + 1 < n; ++j)
    for (std::size_t i = 0; i + j < n; ++i)
      p[i] = (nodes[i] * p[i + 1] - nodes[i + j] * p[i]) / (nodes[i] - nodes[i + j]);
  // p[0] = P over nodes 0..n-2, p[1] = P over nodes 1..n-1
  const Real prev = p[0], second = p[1];
  const Real best = (nodes[0] * p[1] - nodes[n - 1] * p[0]) / (nodes[0] - nodes[n - 1]);
  return {best, fabs(best - prev) + fabs(best - second)};
}

// Dyadic node ladder 2^-k for k = k_lo..k_hi (inclusive).
template <class Real>
std::vector<Real> dyadic_nodes(int k_lo, int k_hi) {
  using std::ldexp;
  if (k_lo > k_hi) throw std::invalid_argument("dyadic_nodes: empty range");
  std::vector<Real> out;
  out.reserve(static_cast<std::size_t>(k_hi - k_lo + 1));
  for (int k = k_lo; k <= k_hi; ++k) out.push_back(ldexp(Real(1), -k));
  return out;
}

}  // namespace bimeans
