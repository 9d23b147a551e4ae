#pragma once

// Bivariate means on pairs of positive reals.
//
// Every mean M here is symmetric, homogeneous of degree 1, and satisfies
// min(a,b) <= M(a,b) <= max(a,b) on its natural parameter range.  All
// evaluations are arranged to be overflow-safe for extreme argument ratios
// and to lose no accuracy as a -> b: the difference-quotient means (arctan,
// arcsine, hyperbolic, logarithmic, exponential) are computed through
//   u = (a-b)/(a+b),  M = A * u / g(u)
// and switch to an even series in u once |u| < 1e-3 (the adaptive series
// keeps enough terms for the current precision; 8 terms already suffice for
// double).  Power means use a normalized log-space form whose small-exponent
// branch reduces exactly to the geometric mean as r -> 0.

#include "bimeans/real.hpp"

#include <cmath>

namespace bimeans {
namespace detail {

// Series switch radius in u for the difference-quotient means.
inline constexpr double kSeriesRadius = 1e-3;

// atan(u)/u = sum_{k>=0} (-1)^k u^(2k) / (2k+1)
template <class Real>
Real atan_over_u(const Real& u) {
  using std::fabs;
  const Real eps = real_eps<Real>();
  const Real u2 = u * u;
  Real term(1), sum(1);
  for (int k = 1; k < 1024; ++k) {
    term *= -u2;
    const Real add = term / (2 * k + 1);
    sum += add;
    if (fabs(add) < eps * fabs(sum)) break;
  }
  return sum;
}

// asin(u)/u = sum_{k>=0} c_k u^(2k),  c_0 = 1, c_k = c_{k-1} (2k-1)^2 / ((2k)(2k+1))
template <class Real>
Real asin_over_u(const Real& u) {
  using std::fabs;
  const Real eps = real_eps<Real>();
  const Real u2 = u * u;
  Real c(1), sum(1), upow(1);
  for (int k = 1; k < 1024; ++k) {
    c *= Real((2 * k - 1) * (2 * k - 1)) / Real(2 * k * (2 * k + 1));
    upow *= u2;
    const Real add = c * upow;
    sum += add;
    if (fabs(add) < eps * fabs(sum)) break;
  }
  return sum;
}

// asinh(u)/u — same coefficients as asin(u)/u with alternating signs.
template <class Real>
Real asinh_over_u(const Real& u) {
  using std::fabs;
  const Real eps = real_eps<Real>();
  const Real u2 = u * u;
  Real c(1), sum(1), upow(1);
  for (int k = 1; k < 1024; ++k) {
    c *= -Real((2 * k - 1) * (2 * k - 1)) / Real(2 * k * (2 * k + 1));
    upow *= u2;
    const Real add = c * upow;
    sum += add;
    if (fabs(add) < eps * fabs(sum)) break;
  }
  return sum;
}

// atanh(u)/u = sum_{k>=0} u^(2k) / (2k+1)
template <class Real>
Real atanh_over_u(const Real& u) {
  using std::fabs;
  const Real eps = real_eps<Real>();
  const Real u2 = u * u;
  Real term(1), sum(1);
  for (int k = 1; k < 1024; ++k) {
    term *= u2;
    const Real add = term / (2 * k + 1);
    sum += add;
    if (fabs(add) < eps * fabs(sum)) break;
  }
  return sum;
}

// ln A - ln I = sum_{k>=1} u^(2k) / (2k (2k+1))  (>= 0)
template <class Real>
Real identric_gap(const Real& u) {
  using std::fabs;
  const Real eps = real_eps<Real>();
  const Real u2 = u * u;
  Real upow(1), sum(0);
  for (int k = 1; k < 1024; ++k) {
    upow *= u2;
    const Real add = upow / (2 * k * (2 * k + 1));
    sum += add;
    if (fabs(add) < eps * fabs(sum)) break;
  }
  return sum;
}

// cosh(t) - 1 = sum_{k>=1} t^(2k) / (2k)!   (for |t| < 1/2)
template <class Real>
Real coshm1(const Real& t) {
  using std::fabs;
  const Real eps = real_eps<Real>();
  const Real t2 = t * t;
  Real term = t2 / 2, sum = term;
  for (int k = 2; k < 1024; ++k) {
    term *= t2 / ((2 * k - 1) * (2 * k));
    sum += term;
    if (fabs(term) < eps * fabs(sum)) break;
  }
  return sum;
}

}  // namespace detail

template <class Real>
Real arithmetic_mean(const Real& a, const Real& b) {
  check_positive(a, b);
  return (a + b) / 2;
}

template <class Real>
Real geometric_mean(const Real& a, const Real& b) {
  check_positive(a, b);
  using std::sqrt;
  return sqrt(a) * sqrt(b);
}

// Power mean A_r(a,b) = ((a^r + b^r)/2)^(1/r), with A_0 = geometric mean.
// Normalized form: with m = max, w = min/max in (0,1], sigma = -ln(w)/2 > 0,
//   A_r = m * exp(-sigma + lncosh(r sigma)/r),   lncosh(t) = ln cosh(t),
// computed as t - ln2 + log1p(exp(-2t)) for t >= 1/2 (overflow-free) and via
// an adaptive series for cosh(t)-1 below that (exact geometric limit r -> 0).
template <class Real>
Real power_mean(const Real& r, const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::exp;
  using std::fabs;
  using std::log;
  using std::log1p;
  using std::sqrt;
  const Real m = a > b ? a : b;
  const Real w = (a > b ? b : a) / m;
  if (r == 0) return m * sqrt(w);
  const Real sigma = -log(w) / 2;
  const Real t = fabs(r) * sigma;
  Real lncosh;
  if (t < Real(1) / 2)
    lncosh = log1p(detail::coshm1(t));
  else
    lncosh = t - const_ln2<Real>() + log1p(exp(-2 * t));
  return m * exp(-sigma + lncosh / r);
}

template <class Real>
Real quadratic_mean(const Real& a, const Real& b) {
  return power_mean(Real(2), a, b);
}

// Lehmer mean L_r(a,b) = (a^(r+1) + b^(r+1)) / (a^r + b^r).
// For r < -1/2 reflect through L_r = G^2 / L_{-r-1} so the direct quotient
// only ever sees exponents in [-1/2, inf) where w^r cannot overflow.
template <class Real>
Real lehmer_mean(const Real& r, const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::pow;
  using std::sqrt;
  if (r < -Real(1) / 2) {
    const Real g = sqrt(a) * sqrt(b);
    return g * (g / lehmer_mean(-r - 1, a, b));
  }
  const Real m = a > b ? a : b;
  const Real w = (a > b ? b : a) / m;
  return m * (1 + pow(w, r + 1)) / (1 + pow(w, r));
}

// Contraharmonic mean (a^2 + b^2) / (a + b) = Lehmer mean of order 1.
template <class Real>
Real contraharmonic_mean(const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  const Real m = a > b ? a : b;
  const Real w = (a > b ? b : a) / m;
  return m * (1 + w * w) / (1 + w);
}

// Q^2 / L_{p-1} = (a^2 + b^2)(a^(p-1) + b^(p-1)) / (2 (a^p + b^p)).
// Interpolates contraharmonic (p = 1) and arithmetic (p = 2); strictly
// decreasing in p for a != b.
template <class Real>
Real q2_over_lehmer(const Real& p, const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::pow;
  if (p < Real(1) / 2) {
    const Real q = quadratic_mean(a, b);
    return q * (q / lehmer_mean(p - 1, a, b));
  }
  const Real m = a > b ? a : b;
  const Real w = (a > b ? b : a) / m;
  return m * (1 + w * w) * (1 + pow(w, p - 1)) / (2 * (1 + pow(w, p)));
}

// Second Seiffert mean  T(a,b) = (a-b) / (2 atan((a-b)/(a+b))).
template <class Real>
Real seiffert_t(const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::atan;
  using std::fabs;
  const Real A = (a + b) / 2;
  const Real u = (a - b) / (a + b);
  const Real g = fabs(u) < Real(detail::kSeriesRadius) ? detail::atan_over_u(u) : atan(u) / u;
  return A / g;
}

// First Seiffert mean  P(a,b) = (a-b) / (2 asin((a-b)/(a+b))).
template <class Real>
Real seiffert_p(const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::asin;
  using std::fabs;
  const Real A = (a + b) / 2;
  const Real u = (a - b) / (a + b);
  const Real g = fabs(u) < Real(detail::kSeriesRadius) ? detail::asin_over_u(u) : asin(u) / u;
  return A / g;
}

// Hyperbolic-sine mean  N(a,b) = (a-b) / (2 asinh((a-b)/(a+b))).
template <class Real>
Real neuman_sandor(const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::asinh;
  using std::fabs;
  const Real A = (a + b) / 2;
  const Real u = (a - b) / (a + b);
  const Real g = fabs(u) < Real(detail::kSeriesRadius) ? detail::asinh_over_u(u) : asinh(u) / u;
  return A / g;
}

// Logarithmic mean  L(a,b) = (a-b) / (ln a - ln b) = (a-b) / (2 atanh(u)) * ...
// via the same u-form: L = A u / atanh(u).
template <class Real>
Real logarithmic_mean(const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::atanh;
  using std::fabs;
  const Real A = (a + b) / 2;
  const Real u = (a - b) / (a + b);
  const Real g = fabs(u) < Real(detail::kSeriesRadius) ? detail::atanh_over_u(u) : atanh(u) / u;
  return A / g;
}

// Identric mean  I(a,b) = e^{-1} (a^a / b^b)^{1/(a-b)}, computed through
// ln I - ln A = ((1+u) ln(1+u) - (1-u) ln(1-u)) / (2u) - 1   (<= 0),
// with the even series  ln A - ln I = sum u^(2k)/(2k(2k+1))  for small |u|.
template <class Real>
Real identric_mean(const Real& a, const Real& b) {
  check_positive(a, b);
  if (a == b) return a;
  using std::exp;
  using std::fabs;
  using std::log1p;
  const Real A = (a + b) / 2;
  const Real u = (a - b) / (a + b);
  Real gap;  // ln A - ln I >= 0
  if (fabs(u) < Real(detail::kSeriesRadius))
    gap = detail::identric_gap(u);
  else
    gap = 1 - ((1 + u) * log1p(u) - (1 - u) * log1p(-u)) / (2 * u);
  return A * exp(-gap);
}

// Quadratic-pair transform: maps (a,b) to the unique positive pair (x,y) with
//   x + y = sqrt(2(a^2+b^2)),  x - y = a - b,
// so that  A(x,y) = Q(a,b),  G(x,y) = A(a,b)  and  T(a,b) = P(x,y).
template <class Real>
PositivePair<Real> quadratic_pair_transform(const Real& a, const Real& b) {
  check_positive(a, b);
  using std::hypot;
  using std::sqrt;
  const Real s = sqrt(Real(2)) * hypot(a, b);
  const Real d = a - b;
  return PositivePair<Real>((s + d) / 2, (s - d) / 2);
}

}  // namespace bimeans
