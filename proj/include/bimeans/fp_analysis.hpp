#pragma once

// Monotonicity analysis of the log-gap
//
//     F(x) = ln T(1,x) - ln A_p(1,x),   x in (0,1),
//
// between the arctan mean and the power mean of order p.  F extends
// continuously with F(1) = 0, and
//
//     F(x)/(x-1)^2  ->  -(3p-5)/24          as x -> 1,
//     F(x)          ->  ln2/p - ln(pi/2)    as x -> 0+  (p > 0; +inf otherwise).
//
// The sign of F' is carried by a cascade of elementary functions:
//
//     sgn F'(x) = sgn f1(x),
//     f1(x) = (1-x)(x^p+1) / ((x^2+1)(x^{p-1}+1)) - atan((1-x)/(1+x)),
//     f1'(x) = -[x(1-x) / ((x^2+1)^2 (x^{p-1}+1)^2)] f2(x),
//     f2(x) = (1-p)x^p + (p+1)x^{p-1} - 2x^{2p-3} - (p+1)x^{p-2} + (p-1)x^{p-3} + 2,
//     x^{4-p} f2'(x) = f3(x),
//     f3(x) = -p(p-1)x^3 + (p-1)(p+1)x^2 - 2(2p-3)x^p - (p+1)(p-2)x + (p-1)(p-3),
//
// and f4 is the concave quadratic minorant of f3':
//
//     f4(x) = -3p(p-1)x^2 - 2(p-1)(2p^2-4p-1)x + (p-2)(4p^2-7p-1).
//
// For 1 < p < 5/3 the cascade yields a unique interior maximum x3 of F with
// auxiliary sign-change points 0 < x3 < x2 < x1 < 1 (x1 for f3, x2 for f2).
// GapAnalysis locates all three by sign scan + bisection with certified
// brackets and exposes the peak ratio sup_(0,1) T/A_p = exp(F(x3)).

#include "bimeans/extrapolate.hpp"
#include "bimeans/means.hpp"
#include "bimeans/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace bimeans {

namespace detail {
template <class Real>
void check_unit_interval(const Real& x) {
  if (!(x > 0 && x < 1)) throw std::domain_error("argument must lie in (0,1)");
}
}  // namespace detail

template <class Real>
Real log_gap(const Real& p, const Real& x) {
  detail::check_unit_interval(x);
  using std::log;
  return log(seiffert_t(Real(1), x)) - log(power_mean(p, Real(1), x));
}

template <class Real>
Real log_gap_f1(const Real& p, const Real& x) {
  detail::check_unit_interval(x);
  using std::atan;
  using std::pow;
  return (1 - x) * (pow(x, p) + 1) / ((x * x + 1) * (pow(x, p - 1) + 1)) -
         atan((1 - x) / (1 + x));
}

template <class Real>
Real log_gap_f2(const Real& p, const Real& x) {
  detail::check_unit_interval(x);
  using std::pow;
  return (1 - p) * pow(x, p) + (p + 1) * pow(x, p - 1) - 2 * pow(x, 2 * p - 3) -
         (p + 1) * pow(x, p - 2) + (p - 1) * pow(x, p - 3) + 2;
}

template <class Real>
Real log_gap_f3(const Real& p, const Real& x) {
  detail::check_unit_interval(x);
  using std::pow;
  return -p * (p - 1) * x * x * x + (p - 1) * (p + 1) * x * x - 2 * (2 * p - 3) * pow(x, p) -
         (p + 1) * (p - 2) * x + (p - 1) * (p - 3);
}

template <class Real>
Real log_gap_f4(const Real& p, const Real& x) {
  detail::check_unit_interval(x);
  return -3 * p * (p - 1) * x * x - 2 * (p - 1) * (2 * p * p - 4 * p - 1) * x +
         (p - 2) * (4 * p * p - 7 * p - 1);
}

// Closed form of lim_{x->1} F(x)/(x-1)^2.
template <class Real>
Real log_gap_curvature_limit(const Real& p) {
  return -(3 * p - 5) / 24;
}

// Closed form of lim_{x->0+} F(x): ln2/p - ln(pi/2) for p > 0, else +inf.
template <class Real>
Real log_gap_zero_limit(const Real& p) {
  using std::log;
  if (!(p > 0)) return const_infinity<Real>();
  return const_ln2<Real>() / p - log(const_pi<Real>() / 2);
}

// Certified critical-point analysis at a fixed order p and working precision.
class GapAnalysis {
 public:
  GapAnalysis(BigFloat p, unsigned digits = 50) : p_(std::move(p)), digits_(digits) {
    if (digits_ < 30) throw std::invalid_argument("GapAnalysis needs >= 30 digits");
  }

  const BigFloat& p() const { return p_; }
  unsigned digits() const { return digits_; }

  BigFloat F(const BigFloat& x) const {
    ScopedPrecision prec(digits_);
    return log_gap(p_, x);
  }
  BigFloat f1(const BigFloat& x) const {
    ScopedPrecision prec(digits_);
    return log_gap_f1(p_, x);
  }
  BigFloat f2(const BigFloat& x) const {
    ScopedPrecision prec(digits_);
    return log_gap_f2(p_, x);
  }
  BigFloat f3(const BigFloat& x) const {
    ScopedPrecision prec(digits_);
    return log_gap_f3(p_, x);
  }
  BigFloat f4(const BigFloat& x) const {
    ScopedPrecision prec(digits_);
    return log_gap_f4(p_, x);
  }

  // Location of the unique interior maximum of F (zero of f1), for p in
  // (1, 5/3).  The result carries a certified sign-change bracket of width
  // <= 10^(5 - digits) and the f1 residual at the midpoint; sign_ok records
  // that f1 is positive at the bracket's left edge and negative at its right.
  struct CertifiedRoot {
    RootResult<BigFloat> root;
    bool sign_ok = false;
  };

  CertifiedRoot find_x3() const {
    require_open_range();
    ScopedPrecision prec(digits_);
    auto f = [this](const BigFloat& x) { return log_gap_f1(p_, x); };
    const auto r = locate_unique_zero(f);
    const bool ok = f(r.lo) > 0 && f(r.hi) < 0;
    return {r, ok};
  }

  struct AuxiliaryRoots {
    RootResult<BigFloat> x1;  // zero of f3
    RootResult<BigFloat> x2;  // zero of f2
    bool ordered = false;     // 0 < x3 < x2 < x1 < 1 verified
  };

  AuxiliaryRoots find_auxiliary_roots() const {
    require_open_range();
    ScopedPrecision prec(digits_);
    auto g3 = [this](const BigFloat& x) { return log_gap_f3(p_, x); };
    auto g2 = [this](const BigFloat& x) { return log_gap_f2(p_, x); };
    AuxiliaryRoots out;
    out.x1 = locate_unique_zero(g3);
    out.x2 = locate_unique_zero(g2);
    const auto x3 = find_x3();
    out.ordered = BigFloat(0) < x3.root.root && x3.root.root < out.x2.root &&
                  out.x2.root < out.x1.root && out.x1.root < BigFloat(1);
    return out;
  }

  // sup over (0,1) of T(1,x)/A_p(1,x) = exp(F(x3)), for p in (1,5/3).
  BigFloat peak_ratio() const {
    ScopedPrecision prec(digits_);
    return exp(F(find_x3().root.root));
  }

  // Numeric cross-check of the closed-form curvature limit at x = 1:
  // Richardson-extrapolates F(1-h)/h^2 over h = 2^-8 .. 2^-20.
  Extrapolated<BigFloat> curvature_at_one() const {
    ScopedPrecision prec(digits_);
    const auto nodes = dyadic_nodes<BigFloat>(8, 20);
    std::vector<BigFloat> vals;
    vals.reserve(nodes.size());
    for (const auto& h : nodes) vals.push_back(log_gap(p_, 1 - h) / (h * h));
    return extrapolate_to_zero(nodes, vals);
  }

  // Numeric cross-check of the limit at x = 0+, extrapolated in s = sqrt(x)
  // over x = 10^-4 .. 10^-12 (the sqrt node variable also absorbs half-power
  // asymptotics, so the same ladder serves the arcsine-type means).
  Extrapolated<BigFloat> gap_at_zero() const {
    ScopedPrecision prec(digits_);
    std::vector<BigFloat> nodes, vals;
    for (int k = 4; k <= 12; ++k) {
      const BigFloat s = pow(BigFloat(10), -BigFloat(k) / 2);
      nodes.push_back(s);
      vals.push_back(log_gap(p_, s * s));
    }
    return extrapolate_to_zero(nodes, vals);
  }

 private:
  void require_open_range() const {
    if (!(p_ > 1 && p_ < BigFloat(5) / 3))
      throw std::domain_error("critical-point analysis requires 1 < p < 5/3");
  }

  template <class F>
  RootResult<BigFloat> locate_unique_zero(F&& f) const {
    // Trim the endpoints: the cascade functions all vanish at x = 1 exactly,
    // which would otherwise register a spurious terminal bracket.
    const BigFloat edge = ldexp(BigFloat(1), -16);
    const BigFloat lo = edge, hi = 1 - edge;
    auto brackets = scan_sign_changes(f, lo, hi, 64);
    if (brackets.size() != 1) brackets = scan_sign_changes(f, lo, hi, 1024);
    if (brackets.size() != 1)
      throw std::runtime_error("expected exactly one sign change on (0,1)");
    const BigFloat width = pow10_neg(static_cast<long>(digits_) - 5);
    return bisect(f, brackets[0].lo, brackets[0].hi, width);
  }

  BigFloat p_;
  unsigned digits_;
};

}  // namespace bimeans
