#pragma once

// Bracketed root finding: uniform sign scan + bisection, and a golden-section
// maximizer.  Bisection is deliberately the only root refiner here — every
// returned root carries a certified sign-change bracket, which downstream
// reports expose verbatim.

#include "bimeans/real.hpp"

#include <stdexcept>
#include <vector>

namespace bimeans {

template <class Real>
struct Bracket {
  Real lo, hi;
};

template <class Real>
struct RootResult {
  Real root;      // bracket midpoint
  Real lo, hi;    // certified sign-change bracket
  Real residual;  // f(root)
  int iterations = 0;
};

namespace detail {
template <class Real>
int sgn(const Real& v) {
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}
}  // namespace detail

// Scan [lo,hi] with `intervals` equal cells and report every cell whose
// endpoint signs differ (a zero landing exactly on a node is credited to the
// cell on its left).
template <class Real, class F>
std::vector<Bracket<Real>> scan_sign_changes(F&& f, const Real& lo, const Real& hi,
                                             int intervals) {
  if (!(lo < hi) || intervals < 1)
    throw std::invalid_argument("scan_sign_changes: bad interval");
  std::vector<Bracket<Real>> out;
  Real x_prev = lo;
  int s_prev = detail::sgn(f(lo));
  for (int i = 1; i <= intervals; ++i) {
    const Real x = lo + (hi - lo) * i / intervals;
    const int s = detail::sgn(f(x));
    if (s_prev * s < 0 || (s_prev != 0 && s == 0)) out.push_back({x_prev, x});
    x_prev = x;
    s_prev = s;
  }
  return out;
}

// Bisection on a certified sign-change bracket, run until the bracket is
// narrower than width_target (or the midpoint degenerates at the current
// precision).  The returned bracket still straddles the sign change.
template <class Real, class F>
RootResult<Real> bisect(F&& f, Real lo, Real hi, const Real& width_target) {
  if (!(lo <= hi)) throw std::invalid_argument("bisect: inverted bracket");
  Real flo = f(lo);
  if (flo == 0) return {lo, lo, lo, flo, 0};
  Real fhi = f(hi);
  if (fhi == 0) return {hi, hi, hi, fhi, 0};
  if ((flo < 0) == (fhi < 0)) throw std::invalid_argument("bisect: no sign change on bracket");
  int it = 0;
  while (hi - lo > width_target) {
    const Real mid = (lo + hi) / 2;
    if (!(lo < mid && mid < hi)) break;  // precision floor reached
    const Real fm = f(mid);
    ++it;
    if (fm == 0) {
      lo = hi = mid;
      break;
    }
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  const Real root = (lo + hi) / 2;
  return {root, lo, hi, f(root), it};
}

// Golden-section maximizer for a unimodal g on [lo,hi]; returns the argmax
// located to within width_target.
template <class Real, class G>
Real golden_max(G&& g, Real lo, Real hi, const Real& width_target) {
  using std::sqrt;
  if (!(lo < hi)) throw std::invalid_argument("golden_max: bad interval");
  const Real invphi = (sqrt(Real(5)) - 1) / 2;
  Real x1 = hi - invphi * (hi - lo);
  Real x2 = lo + invphi * (hi - lo);
  Real g1 = g(x1), g2 = g(x2);
  while (hi - lo > width_target) {
    if (g1 < g2) {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + invphi * (hi - lo);
      if (!(x1 < x2)) break;  // precision floor
      g2 = g(x2);
    } else {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - invphi * (hi - lo);
      if (!(x1 < x2)) break;
      g1 = g(x1);
    }
  }
  return (lo + hi) / 2;
}

}  // namespace bimeans
