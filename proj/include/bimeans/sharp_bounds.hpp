#pragma once

// Sharp power-mean comparability for a symmetric homogeneous mean M:
//
//   p_lower = the largest p with A_p(a,b) < M(a,b) for all a != b,
//   p_upper = the smallest p with M(a,b) < A_p(a,b) for all a != b,
//
// plus the best constant envelopes
//
//   alpha * A_{p_upper} < M < beta * A_{p_lower}.
//
// Both critical exponents come from endpoint behaviour of the margin
// g_q(x) = ln M(1,x) - ln A_q(1,x) on x in (0,1):
//
//  * near x = 1 the margin is ~ m2(q) (1-x)^2 where m2 is affine in q with
//    slope -1/8 (power means contribute (q-2)/8 to the quadratic term of
//    ln A_q(1,1-h)); the critical exponent at 1 solves m2(q) = 0 and is read
//    off two Richardson-extrapolated curvature measurements;
//  * near x = 0 the binding exponent solves A_q(1,0+) = 2^(-1/q) = M(1,0+),
//    i.e. q = ln2 / (-ln M(1,0+)), defined when M(1,0+) lies in (0,1).
//
// Envelope factors are exp of the extremal margin over (0,1]; the extremum is
// located on a clustered grid and refined by golden section, except for the
// arctan mean where the interior peak is instead certified by the dedicated
// derivative-sign root finder (bracketed bisection on f1).

#include "bimeans/expr.hpp"
#include "bimeans/extrapolate.hpp"
#include "bimeans/fp_analysis.hpp"
#include "bimeans/grid.hpp"
#include "bimeans/roots.hpp"

#include <optional>
#include <string>
#include <utility>

namespace bimeans {

namespace detail {

// Margin g_q(x) = ln M(1,x) - ln A_q(1,x) at the current precision.
inline BigFloat sharp_margin(const MeanExpr& e, const BigFloat& q, const BigFloat& x,
                             const ParamMap<BigFloat>& ps) {
  return log(eval(e, BigFloat(1), x, ps)) - log(power_mean(q, BigFloat(1), x));
}

// lim_{x->1} g_q(x)/(1-x)^2 by Richardson over h = 2^-8 .. 2^-20.
inline Extrapolated<BigFloat> margin_curvature(const MeanExpr& e, const BigFloat& q,
                                               const ParamMap<BigFloat>& ps) {
  const auto nodes = dyadic_nodes<BigFloat>(8, 20);
  std::vector<BigFloat> vals;
  vals.reserve(nodes.size());
  for (const auto& h : nodes) vals.push_back(sharp_margin(e, q, 1 - h, ps) / (h * h));
  return extrapolate_to_zero(nodes, vals);
}

}  // namespace detail

// M(1, 0+), extrapolated in s = sqrt(x) over x = 10^-4 .. 10^-12 (the sqrt
// node variable absorbs the half-power asymptotics of the arcsine family).
inline Extrapolated<BigFloat> endpoint_limit_at_zero(const MeanExpr& e, unsigned digits = 50,
                                                     const ParamMap<BigFloat>& ps = {}) {
  ScopedPrecision prec(digits);
  std::vector<BigFloat> nodes, vals;
  for (int k = 4; k <= 12; ++k) {
    const BigFloat s = pow(BigFloat(10), -BigFloat(k) / 2);
    nodes.push_back(s);
    vals.push_back(eval(e, BigFloat(1), s * s, ps));
  }
  return extrapolate_to_zero(nodes, vals);
}

struct CriticalExponent {
  BigFloat value;
  BigFloat residual;  // independent defect measurement at the solution
};

// Critical order at equal arguments: the q for which the quadratic term of
// the margin vanishes.  residual is the remeasured curvature at the answer
// (should be ~0; values above ~1e-7 mean the expansion assumption failed).
inline CriticalExponent critical_exponent_at_one(const MeanExpr& e, unsigned digits = 50,
                                                 const ParamMap<BigFloat>& ps = {}) {
  ScopedPrecision prec(digits);
  const BigFloat m0 = detail::margin_curvature(e, BigFloat(0), ps).value;
  const BigFloat m1 = detail::margin_curvature(e, BigFloat(1), ps).value;
  if (m0 == m1) throw std::domain_error("margin curvature is not affine-separated in the order");
  const BigFloat p_star = m0 / (m0 - m1);
  const BigFloat res = abs(detail::margin_curvature(e, p_star, ps).value);
  return {p_star, res};
}

// Critical order at extreme arguments: solves 2^(-1/q) = M(1,0+).
// Requires M(1,0+) in (0,1) and a converged endpoint extrapolation.
inline CriticalExponent critical_exponent_at_zero(const MeanExpr& e, unsigned digits = 50,
                                                  const ParamMap<BigFloat>& ps = {}) {
  ScopedPrecision prec(digits);
  const auto m0 = endpoint_limit_at_zero(e, digits, ps);
  if (!(m0.value > 0 && m0.value < 1))
    throw std::domain_error("endpoint limit M(1,0+) must lie in (0,1)");
  if (!(m0.error_estimate < pow10_neg(12)))
    throw std::runtime_error("endpoint limit extrapolation did not converge");
  return {const_ln2<BigFloat>() / -log(m0.value), m0.error_estimate};
}

struct SharpBoundReport {
  std::string mean;  // canonical term text
  unsigned digits = 50;
  int sweep_points = 512;

  BigFloat p_lower, p_upper;
  std::string lower_binding, upper_binding;  // "x->0+" or "x->1"
  BigFloat curvature_residual;               // from the at-one exponent
  BigFloat zero_limit_error;                 // from the at-zero extrapolation

  BigFloat alpha, beta;  // alpha * A_{p_upper} < M < beta * A_{p_lower}
  std::string alpha_binding, beta_binding;   // endpoint labels or "interior"
  std::optional<BigFloat> beta_x_star;       // interior peak location
  std::optional<std::pair<BigFloat, BigFloat>> beta_x_star_bracket;
  std::optional<BigFloat> beta_x_star_residual;
  std::optional<BigFloat> alpha_x_star;      // interior dip location (uncommon)

  BigFloat sweep_min_lower_margin;  // min over grid of ln M - ln A_{p_lower}
  BigFloat sweep_min_upper_margin;  // min over grid of ln A_{p_upper} - ln M
  bool conclusive = true;
  std::string note;
};

namespace detail {

struct Extremum {
  BigFloat value;              // extremal margin (sign convention of caller)
  std::string binding;         // "x->0+", "x->1", "interior"
  std::optional<BigFloat> x_star;
};

// Largest value of g over the grid (already includes endpoint candidates
// end0 at x->0+ and 0 at x->1), refined by golden section when interior.
template <class G>
Extremum sup_margin(G&& g, const std::vector<BigFloat>& xs, const BigFloat& end0) {
  std::size_t best = 0;
  BigFloat best_v = g(xs[0]);
  std::vector<BigFloat> cache(xs.size());
  cache[0] = best_v;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    cache[i] = g(xs[i]);
    if (cache[i] > best_v) {
      best_v = cache[i];
      best = i;
    }
  }
  Extremum out;
  const BigFloat end1(0);
  if (best > 0 && best + 1 < xs.size()) {
    // interior candidate: refine within the bracketing cells
    const BigFloat lo = xs[best - 1], hi = xs[best + 1];
    const BigFloat width = pow10_neg(static_cast<long>(current_digits()) / 2);
    const BigFloat x_star = golden_max(g, lo, hi, width);
    const BigFloat v_star = g(x_star);
    if (v_star > end0 && v_star > end1) {
      out.value = v_star;
      out.binding = "interior";
      out.x_star = x_star;
      return out;
    }
  }
  if (end0 > end1) {
    out.value = end0;
    out.binding = "x->0+";
  } else {
    out.value = end1;
    out.binding = "x->1";
  }
  return out;
}

}  // namespace detail

inline SharpBoundReport sharp_report(const MeanExpr& e, unsigned digits = 50,
                                     int sweep_points = 512,
                                     const ParamMap<BigFloat>& ps = {}) {
  if (digits < 30) throw std::invalid_argument("sharp_report needs >= 30 digits");
  ScopedPrecision prec(digits);
  SharpBoundReport rep;
  rep.mean = to_text(e);
  rep.digits = digits;
  rep.sweep_points = sweep_points;

  const CriticalExponent at_one = critical_exponent_at_one(e, digits, ps);
  const CriticalExponent at_zero = critical_exponent_at_zero(e, digits, ps);
  rep.curvature_residual = at_one.residual;
  rep.zero_limit_error = at_zero.residual;
  if (at_zero.value <= at_one.value) {
    rep.p_lower = at_zero.value;
    rep.lower_binding = "x->0+";
    rep.p_upper = at_one.value;
    rep.upper_binding = "x->1";
  } else {
    rep.p_lower = at_one.value;
    rep.lower_binding = "x->1";
    rep.p_upper = at_zero.value;
    rep.upper_binding = "x->0+";
  }
  if (!(at_one.residual < pow10_neg(7))) {
    rep.conclusive = false;
    rep.note = "curvature residual at the equal-argument exponent is too large";
  }

  // envelope grid (clustered at both ends)
  GridSpec gbase;
  gbase.points = sweep_points < 64 ? 64 : sweep_points;
  const auto xs = make_ratio_grid(gbase);

  const BigFloat m0 = endpoint_limit_at_zero(e, digits, ps).value;

  // beta: sup of ln M - ln A_{p_lower}
  {
    const BigFloat q = rep.p_lower;
    auto g = [&](const BigFloat& x) { return detail::sharp_margin(e, q, x, ps); };
    const BigFloat end0 = q > 0 ? log(m0) + const_ln2<BigFloat>() / q : -const_infinity<BigFloat>();
    if (e.node == MeanExpr::Node::leaf && e.leaf == MeanExpr::Leaf::seiffert_t && q > 1 &&
        q < BigFloat(5) / 3) {
      // certified peak for the arctan mean
      GapAnalysis ga(q, digits);
      const auto x3 = ga.find_x3();
      rep.beta = exp(g(x3.root.root));
      rep.beta_binding = "interior";
      rep.beta_x_star = x3.root.root;
      rep.beta_x_star_bracket = std::make_pair(x3.root.lo, x3.root.hi);
      rep.beta_x_star_residual = x3.root.residual;
      if (!x3.sign_ok) {
        rep.conclusive = false;
        rep.note = "peak certificate failed the sign check";
      }
    } else {
      const auto ext = detail::sup_margin(g, xs, end0);
      rep.beta = exp(ext.value);
      rep.beta_binding = ext.binding;
      rep.beta_x_star = ext.x_star;
    }
  }

  // alpha: exp of inf of ln M - ln A_{p_upper} == -sup of the negated margin
  {
    const BigFloat q = rep.p_upper;
    auto gneg = [&](const BigFloat& x) { return -detail::sharp_margin(e, q, x, ps); };
    const BigFloat end0 =
        q > 0 ? -(log(m0) + const_ln2<BigFloat>() / q) : const_infinity<BigFloat>();
    const auto ext = detail::sup_margin(gneg, xs, end0);
    rep.alpha = exp(-ext.value);
    rep.alpha_binding = ext.binding;
    rep.alpha_x_star = ext.x_star;
  }

  // confirmation sweep: strict ordering A_{p_lower} < M < A_{p_upper} on the grid
  BigFloat min_lo = const_infinity<BigFloat>(), min_up = const_infinity<BigFloat>();
  std::optional<BigFloat> bad_x;
  for (const auto& x : xs) {
    const BigFloat lo_m = detail::sharp_margin(e, rep.p_lower, x, ps);
    const BigFloat up_m = -detail::sharp_margin(e, rep.p_upper, x, ps);
    if (lo_m < min_lo) min_lo = lo_m;
    if (up_m < min_up) min_up = up_m;
    if ((lo_m <= 0 || up_m <= 0) && !bad_x) bad_x = x;
  }
  rep.sweep_min_lower_margin = min_lo;
  rep.sweep_min_upper_margin = min_up;
  if (bad_x) {
    rep.conclusive = false;
    rep.note = "sweep found a nonpositive margin near x = " + to_decimal(*bad_x, 20);
  }
  return rep;
}

}  // namespace bimeans
