#pragma once

// Numerical verification of strict inequality chains between symmetric
// homogeneous means on a deterministic ratio grid.
//
// A chain  t_0 < t_1 < ... < t_k  is checked pointwise on normalized pairs
// (1, x) for a grid of ratios x in (0,1).  For every adjacent pair of terms
// the log-margin  ln t_{i+1}(1,x) - ln t_i(1,x)  is computed at the requested
// decimal precision.  A margin is trusted only when it clears an error bound
// of 10^(4-digits) -- several orders of magnitude above worst-case rounding
// noise -- and anything closer to zero is re-examined at twice the precision
// before the chain is classified:
//
//   verified_on_grid   every sampled margin is positive beyond the bound
//   counterexample     some margin is certainly negative, or is exactly zero
//                      at both precisions (strictness fails identically)
//   inconclusive       a margin is too close to zero to call either way
//
// The base sweep is followed by a few rounds of midpoint refinement around
// each adjacent pair's running minimum, so chains that come close to touching
// are probed hardest where contact is most likely.  Counterexample witnesses
// always include the extreme violating ratios as well as the worst one, which
// pins down *where* a false chain fails (near an endpoint or in the interior).

#include "bimeans/expr.hpp"
#include "bimeans/grid.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bimeans {

// A named strict chain.  Terms reference numeric parameters as $symbols;
// bindings come either from `params` (exact literals, e.g. loaded from a
// chain file) or from `registry` (name of a computed constant, resolved at
// whatever precision the verification runs at).  Literals shadow registry
// entries of the same symbol.
struct ChainSpec {
  std::string name;
  std::string description;
  std::string terms;  // '<'-separated prefix terms, e.g. "A < T < Q"
  std::map<std::string, ExprNum> params;
  std::map<std::string, std::string> registry;
  double domain_lo = 0.0;  // open ratio interval to which the grid is
  double domain_hi = 1.0;  // restricted; the full (0,1) by default

  bool operator==(const ChainSpec&) const = default;
};

// Resolves a registry constant name to its value at the given precision.
using ConstantResolver = std::function<BigFloat(const std::string&, unsigned)>;

enum class ChainStatus { verified_on_grid, counterexample, inconclusive };

inline const char* to_string(ChainStatus s) {
  switch (s) {
    case ChainStatus::verified_on_grid:
      return "verified-on-grid";
    case ChainStatus::counterexample:
      return "counterexample";
    case ChainStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

// A ratio at which one adjacent inequality was refuted (or could not be
// decided).  Values and the margin are re-evaluated at twice the requested
// precision before a point is reported here.
struct ChainWitness {
  std::size_t pair_index = 0;  // terms[pair_index] < terms[pair_index + 1]
  BigFloat x;
  BigFloat left_value;
  BigFloat right_value;
  BigFloat margin;  // ln(right) - ln(left) at the doubled precision
};

struct ChainReport {
  std::string name;
  ChainStatus status = ChainStatus::inconclusive;
  unsigned digits = 0;
  std::size_t grid_points = 0;  // sampled ratios, refinement included
  std::size_t pair_count = 0;
  BigFloat min_margin;  // smallest log-margin seen in the base sweep
  BigFloat argmin_x;
  std::size_t argmin_pair = 0;
  std::vector<ChainWitness> witnesses;  // nonempty iff counterexample
  std::string note;
};

namespace detail {

inline BigFloat chain_errbound(unsigned digits) {
  return pow10_neg(static_cast<long>(digits) - 4);
}

inline ParamMap<BigFloat> resolve_chain_params(const ChainSpec& spec, unsigned digits,
                                               const ConstantResolver& resolver) {
  ParamMap<BigFloat> out;
  for (const auto& [sym, num] : spec.params) out.emplace(sym, num.value<BigFloat>({}));
  for (const auto& [sym, cname] : spec.registry) {
    if (out.count(sym)) continue;
    if (!resolver)
      throw std::invalid_argument("chain '" + spec.name + "' references registry constant '" +
                                  cname + "' but no resolver was supplied");
    out.emplace(sym, resolver(cname, digits));
  }
  return out;
}

inline std::vector<BigFloat> chain_grid(const ChainSpec& spec, const GridSpec& grid) {
  if (!(spec.domain_lo >= 0 && spec.domain_lo < spec.domain_hi && spec.domain_hi <= 1))
    throw std::invalid_argument("chain '" + spec.name + "' has an invalid domain");
  std::vector<BigFloat> xs = make_ratio_grid(grid);
  if (spec.domain_lo > 0 || spec.domain_hi < 1) {
    std::erase_if(xs, [&](const BigFloat& x) {
      return !(x > spec.domain_lo && x < spec.domain_hi);
    });
    if (xs.size() < 2)
      throw std::invalid_argument("chain '" + spec.name + "' domain keeps fewer than 2 grid points");
  }
  return xs;
}

}  // namespace detail

// Verify a strict chain on the grid at `digits` decimal digits.  Throws
// std::invalid_argument for digits < 30, malformed chains, or unresolvable
// parameters; ParseError for unparsable terms.
inline ChainReport verify_chain(const ChainSpec& spec, unsigned digits = 50,
                                const GridSpec& grid = {},
                                const ConstantResolver& resolver = {}) {
  if (digits < 30) throw std::invalid_argument("chain verification needs at least 30 digits");
  const std::vector<MeanExpr> terms = parse_chain_terms(spec.terms);
  const std::size_t pairs = terms.size() - 1;

  ChainReport rep;
  rep.name = spec.name;
  rep.digits = digits;
  rep.pair_count = pairs;

  // Base sweep: log-values of every term at every grid ratio.
  std::map<BigFloat, std::vector<BigFloat>> vals;
  {
    ScopedPrecision prec(digits);
    const ParamMap<BigFloat> ps = detail::resolve_chain_params(spec, digits, resolver);
    const auto eval_logs = [&](const BigFloat& x) {
      std::vector<BigFloat> v;
      v.reserve(terms.size());
      for (const auto& t : terms) v.push_back(log(eval(t, BigFloat(1), x, ps)));
      return v;
    };
    for (const BigFloat& x : detail::chain_grid(spec, grid)) vals.emplace(x, eval_logs(x));

    // Midpoint refinement around each pair's running argmin.
    for (int round = 0; round < 3; ++round) {
      std::vector<BigFloat> extra;
      for (std::size_t pair = 0; pair < pairs; ++pair) {
        auto best = vals.begin();
        BigFloat best_m = best->second[pair + 1] - best->second[pair];
        for (auto it = std::next(vals.begin()); it != vals.end(); ++it) {
          const BigFloat m = it->second[pair + 1] - it->second[pair];
          if (m < best_m) {
            best_m = m;
            best = it;
          }
        }
        if (best != vals.begin()) extra.push_back((std::prev(best)->first + best->first) / 2);
        if (std::next(best) != vals.end())
          extra.push_back((best->first + std::next(best)->first) / 2);
      }
      for (const BigFloat& x : extra)
        if (!vals.count(x)) vals.emplace(x, eval_logs(x));
    }
  }
  rep.grid_points = vals.size();

  // Classify margins against the error bound.
  const BigFloat errbound = detail::chain_errbound(digits);
  struct Suspect {
    std::size_t pair;
    BigFloat x;
    BigFloat margin;
  };
  std::vector<Suspect> suspects;
  bool first = true;
  for (const auto& [x, v] : vals) {
    for (std::size_t pair = 0; pair < pairs; ++pair) {
      const BigFloat m = v[pair + 1] - v[pair];
      if (first || m < rep.min_margin) {
        rep.min_margin = m;
        rep.argmin_x = x;
        rep.argmin_pair = pair;
        first = false;
      }
      if (m <= errbound) suspects.push_back({pair, x, m});
    }
  }

  if (suspects.empty()) {
    rep.status = ChainStatus::verified_on_grid;
    return rep;
  }

  // Re-examine borderline points at doubled precision, worst margins first.
  // The smallest- and largest-ratio suspects always make the cut so that a
  // violation hugging an endpoint is reported even when deeper violations
  // crowd it out of the worst-margin ranking.
  std::sort(suspects.begin(), suspects.end(),
            [](const Suspect& a, const Suspect& b) { return a.margin < b.margin; });
  constexpr std::size_t kRecheckCap = 256;
  const bool capped = suspects.size() > kRecheckCap;
  if (capped) {
    const auto [lo_it, hi_it] =
        std::minmax_element(suspects.begin(), suspects.end(),
                            [](const Suspect& a, const Suspect& b) { return a.x < b.x; });
    const Suspect lo = *lo_it, hi = *hi_it;
    suspects.resize(kRecheckCap - 2);
    suspects.push_back(lo);
    suspects.push_back(hi);
  }

  std::vector<ChainWitness> violations;
  bool ambiguous = false;
  BigFloat ambiguous_x;
  {
    const unsigned digits2 = 2 * digits;
    ScopedPrecision prec(digits2);
    const ParamMap<BigFloat> ps = detail::resolve_chain_params(spec, digits2, resolver);
    const BigFloat errbound2 = detail::chain_errbound(digits2);
    for (const Suspect& s : suspects) {
      ChainWitness w;
      w.pair_index = s.pair;
      w.x = s.x;
      w.left_value = eval(terms[s.pair], BigFloat(1), s.x, ps);
      w.right_value = eval(terms[s.pair + 1], BigFloat(1), s.x, ps);
      w.margin = log(w.right_value) - log(w.left_value);
      if (w.margin.is_zero() || w.margin < -errbound2) {
        violations.push_back(std::move(w));  // equality refutes a strict chain too
      } else if (w.margin <= errbound2) {
        if (!ambiguous) ambiguous_x = s.x;
        ambiguous = true;
      }
    }
  }

  if (!violations.empty()) {
    rep.status = ChainStatus::counterexample;
    // Keep the worst margins, but make sure the extreme violating ratios are
    // among the witnesses: a failure hugging x->0 or x->1 should say so.
    std::sort(violations.begin(), violations.end(),
              [](const ChainWitness& a, const ChainWitness& b) { return a.margin < b.margin; });
    const auto [lo_it, hi_it] = std::minmax_element(
        violations.begin(), violations.end(),
        [](const ChainWitness& a, const ChainWitness& b) { return a.x < b.x; });
    std::vector<ChainWitness> picked{violations.front(), *lo_it, *hi_it};
    for (const ChainWitness& w : violations) {
      if (picked.size() >= 8) break;
      picked.push_back(w);
    }
    std::sort(picked.begin(), picked.end(), [](const ChainWitness& a, const ChainWitness& b) {
      return a.x < b.x || (a.x == b.x && a.pair_index < b.pair_index);
    });
    picked.erase(std::unique(picked.begin(), picked.end(),
                             [](const ChainWitness& a, const ChainWitness& b) {
                               return a.x == b.x && a.pair_index == b.pair_index;
                             }),
                 picked.end());
    rep.witnesses = std::move(picked);
    rep.note = "strict inequality refuted at " + std::to_string(rep.witnesses.size()) +
               " reported ratio(s)";
    return rep;
  }

  if (ambiguous || capped) {
    rep.status = ChainStatus::inconclusive;
    rep.note = ambiguous ? "margin within the error bound at x = " + to_decimal(ambiguous_x, 20) +
                               "; increase precision to decide"
                         : "too many borderline points to re-examine; increase precision";
    return rep;
  }

  rep.status = ChainStatus::verified_on_grid;
  return rep;
}

// Log-margins of every adjacent pair at every grid ratio (no refinement).
struct ProfileRow {
  BigFloat x;
  std::vector<BigFloat> margins;
};

inline std::vector<ProfileRow> margin_profile(const ChainSpec& spec, unsigned digits = 50,
                                              const GridSpec& grid = {},
                                              const ConstantResolver& resolver = {}) {
  if (digits < 30) throw std::invalid_argument("margin profiling needs at least 30 digits");
  const std::vector<MeanExpr> terms = parse_chain_terms(spec.terms);
  ScopedPrecision prec(digits);
  const ParamMap<BigFloat> ps = detail::resolve_chain_params(spec, digits, resolver);
  std::vector<ProfileRow> rows;
  for (const BigFloat& x : detail::chain_grid(spec, grid)) {
    ProfileRow row;
    row.x = x;
    BigFloat prev = log(eval(terms[0], BigFloat(1), x, ps));
    for (std::size_t i = 1; i < terms.size(); ++i) {
      const BigFloat cur = log(eval(terms[i], BigFloat(1), x, ps));
      row.margins.push_back(cur - prev);
      prev = cur;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Ratio-monotonicity ("Ky Fan type") comparison for the arctan mean against a
// power mean: for pairs with a1/b1 < a2/b2 < 1,
//
//   margin = [ln T(a1,b1) - ln T(a2,b2)] - [ln A_p(a1,b1) - ln A_p(a2,b2)].
//
// The claim is margin < 0 whenever p >= 5/3 and margin > 0 whenever p <= 1;
// for p strictly between, neither sign is promised.
struct KyFanReport {
  BigFloat margin;
  int claimed_sign = 0;  // -1, +1, or 0 when no sign is claimed
  bool consistent = true;
  unsigned digits = 0;
};

inline KyFanReport verify_kyfan(const BigFloat& p, const BigFloat& a1, const BigFloat& b1,
                                const BigFloat& a2, const BigFloat& b2, unsigned digits = 50) {
  if (digits < 30) throw std::invalid_argument("Ky Fan check needs at least 30 digits");
  check_positive(a1, b1);
  check_positive(a2, b2);
  ScopedPrecision prec(digits);
  const BigFloat x1 = a1 / b1, x2 = a2 / b2;
  if (!(x1 < x2 && x2 < 1))
    throw std::domain_error("Ky Fan comparison needs a1/b1 < a2/b2 < 1");
  KyFanReport rep;
  rep.digits = digits;
  rep.margin = (log(seiffert_t(a1, b1)) - log(seiffert_t(a2, b2))) -
               (log(power_mean(p, a1, b1)) - log(power_mean(p, a2, b2)));
  const BigFloat five_thirds = BigFloat(5) / 3;
  rep.claimed_sign = p >= five_thirds ? -1 : (p <= 1 ? +1 : 0);
  if (rep.claimed_sign < 0)
    rep.consistent = rep.margin < 0;
  else if (rep.claimed_sign > 0)
    rep.consistent = rep.margin > 0;
  return rep;
}

}  // namespace bimeans
