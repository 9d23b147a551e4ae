#pragma once

// Numeric foundations: the extended-precision real type, scoped precision
// control, epsilon/tolerance helpers and decimal formatting.
//
// Everything else in the library is templated on the real type so the same
// formulas run in double (fast tier) and BigFloat (certified tier).

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <ios>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace bimeans {

namespace mp = boost::multiprecision;

// Arbitrary-precision real. Decimal precision is a runtime setting; use
// ScopedPrecision to pin it for a computation. et_off keeps value semantics
// simple (no expression templates), which matters for std::function glue.
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;

inline unsigned current_digits() { return BigFloat::default_precision(); }

// RAII guard: set the working decimal precision for the enclosing scope and
// restore the previous one on exit.  All BigFloat temporaries constructed
// inside the scope carry the scoped precision.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10) : saved_(BigFloat::default_precision()) {
    if (digits10 < 2) throw std::invalid_argument("precision must be at least 2 digits");
    BigFloat::default_precision(digits10);
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

// Machine epsilon of Real at the *current* working precision.  Note that
// numeric_limits<BigFloat>::epsilon() is evaluated lazily against the current
// default precision, which is exactly what we want — but only if tolerances
// are computed at point of use, never cached across precision changes.
template <class Real>
Real real_eps() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
Real const_pi() {
  return boost::math::constants::pi<Real>();
}

template <class Real>
Real const_ln2() {
  return boost::math::constants::ln_two<Real>();
}

template <class Real>
Real const_infinity() {
  return std::numeric_limits<Real>::infinity();
}

// Domain guard shared by every mean: arguments must be finite and > 0.
template <class Real>
void check_positive(const Real& a, const Real& b) {
  using std::isfinite;
  if (!(isfinite(a) && isfinite(b) && a > Real(0) && b > Real(0)))
    throw std::domain_error("mean arguments must be strictly positive and finite");
}

// Pair of strictly positive finite reals — the domain of every bivariate mean.
template <class Real>
struct PositivePair {
  Real a, b;
  PositivePair(Real a_, Real b_) : a(std::move(a_)), b(std::move(b_)) {
    check_positive(a, b);
  }
};

// Decimal rendering with a given number of significant digits (rounded).
inline std::string to_decimal(const BigFloat& v, unsigned digits10) {
  return v.str(static_cast<std::streamsize>(digits10), std::ios_base::fmtflags{});
}

// 10^(-k) at the current precision, k may exceed double range comfortably.
inline BigFloat pow10_neg(long k) { return pow(BigFloat(10), -BigFloat(k)); }

}  // namespace bimeans
