#pragma once

// Built-in constants and the catalog of named inequality chains.
//
// Every constant is recomputed from its closed form (or from the certified
// peak-finding pipeline, for beta2 and x3) at whatever precision the caller
// asks for, so chains that reference them stay exact at any working
// precision.  The chain catalog ships the classical strict chains around the
// arctan mean T together with the sharp power-mean envelopes; each entry is a
// plain ChainSpec whose $symbols resolve through constant_value.

#include "bimeans/chains.hpp"
#include "bimeans/fp_analysis.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bimeans {

struct ConstantInfo {
  std::string name;
  std::string formula;  // human-readable closed form
};

inline const std::vector<ConstantInfo>& constant_catalog() {
  static const std::vector<ConstantInfo> catalog = {
      {"p1", "ln 2 / ln(pi/2); largest power-mean order with A_p < T everywhere"},
      {"p2", "5/3; smallest power-mean order with T < A_p everywhere"},
      {"alpha1", "2^(8/5)/pi; best c with c*A_{5/3} < T"},
      {"beta2", "max of T/A_{p1}; best c with T < c*A_{p1}"},
      {"x3", "ratio where T/A_{p1} peaks (unique interior zero of f1)"},
      {"log_pi_2", "ln 2 / ln pi; largest power-mean order with A_p < P everywhere"},
      {"p0", "ln 2 / ln ln(3+2*sqrt(2)); largest power-mean order with A_p < N everywhere"},
      {"chu1_p1", "(sqrt(2)+1)(4-pi)/pi; best w with w*Q+(1-w)*A < T"},
      {"w3_r1", "2(pi-2*sqrt(2))/((2-sqrt(2))*pi); complement of chu1_p1 (the weight on A)"},
      {"chu2_p2", "(1+sqrt(4/pi-1))/2; best blend w with C(w a+(1-w)b, w b+(1-w)a) < T"},
      {"chu2_q2", "(3+sqrt(3))/6; best blend w with T < C(w a+(1-w)b, w b+(1-w)a)"},
      {"w1_c", "4/pi; best c with T < c*A"},
      {"w2_c", "2*sqrt(2)/pi; best c with c*Q < T"},
      {"t_at_zero", "2/pi; limit of T(1,x) as x -> 0+"},
      {"p_at_zero", "1/pi; limit of P(1,x) as x -> 0+"},
      {"n_at_zero", "1/ln(3+2*sqrt(2)); limit of N(1,x) as x -> 0+"},
  };
  return catalog;
}

// Value of a cataloged constant at `digits` decimal digits.  Throws
// std::out_of_range for unknown names; beta2/x3 require digits >= 30 (they
// run the certified peak pipeline).
inline BigFloat constant_value(const std::string& name, unsigned digits) {
  ScopedPrecision prec(digits);
  const BigFloat pi = const_pi<BigFloat>();
  const BigFloat ln2 = const_ln2<BigFloat>();
  if (name == "p1") return ln2 / log(pi / 2);
  if (name == "p2") return BigFloat(5) / 3;
  if (name == "alpha1") return pow(BigFloat(2), BigFloat(8) / 5) / pi;
  if (name == "beta2") return GapAnalysis(ln2 / log(pi / 2), digits).peak_ratio();
  if (name == "x3") return GapAnalysis(ln2 / log(pi / 2), digits).find_x3().root.root;
  if (name == "log_pi_2") return ln2 / log(pi);
  if (name == "p0") return ln2 / log(log(3 + 2 * sqrt(BigFloat(2))));
  if (name == "chu1_p1") return (sqrt(BigFloat(2)) + 1) * (4 - pi) / pi;
  if (name == "w3_r1") return 2 * (pi - 2 * sqrt(BigFloat(2))) / ((2 - sqrt(BigFloat(2))) * pi);
  if (name == "chu2_p2") return (1 + sqrt(4 / pi - 1)) / 2;
  if (name == "chu2_q2") return (3 + sqrt(BigFloat(3))) / 6;
  if (name == "w1_c") return 4 / pi;
  if (name == "w2_c") return 2 * sqrt(BigFloat(2)) / pi;
  if (name == "t_at_zero") return 2 / pi;
  if (name == "p_at_zero") return 1 / pi;
  if (name == "n_at_zero") return 1 / log(3 + 2 * sqrt(BigFloat(2)));
  throw std::out_of_range("unknown constant: " + name);
}

namespace detail {

inline ChainSpec make_chain(std::string name, std::string description, std::string terms,
                            std::vector<std::string> constants = {}) {
  ChainSpec spec;
  spec.name = std::move(name);
  spec.description = std::move(description);
  spec.terms = std::move(terms);
  for (std::string& c : constants) spec.registry.emplace(c, c);
  return spec;
}

}  // namespace detail

// The built-in chains.  The first thirteen are the classical strict chains
// around T (plus P's power-mean sandwich); the tail holds the refined ladder,
// the hyperbolic-sine sandwich, and the two sharp envelopes.
inline const std::vector<ChainSpec>& chain_catalog() {
  static const std::vector<ChainSpec> catalog = [] {
    using detail::make_chain;
    std::vector<ChainSpec> v;
    v.push_back(make_chain("H-J", "power-mean sandwich for the arcsine mean",
                           "A_$log_pi_2 < P < A_2/3", {"log_pi_2"}));
    v.push_back(make_chain("Seiffert", "arithmetic and quadratic bounds for T", "A < T < Q"));
    v.push_back(make_chain("Sandor",
                           "geometric blends of Q and A around T",
                           "gpow 2/3 Q A < gpow 1/3 Q affine 1/2 Q 1/2 A < T < affine 2/3 Q 1/3 A"));
    v.push_back(make_chain("Chu1", "sharp affine blend of Q and A below T",
                           "affine $chu1_p1 Q $w3_r1 A < T < affine 2/3 Q 1/3 A",
                           {"chu1_p1", "w3_r1"}));
    v.push_back(make_chain("W1", "scaled arithmetic bounds for T", "A < T < scale $w1_c A",
                           {"w1_c"}));
    v.push_back(make_chain("W2", "scaled quadratic bounds for T", "scale $w2_c Q < T < Q",
                           {"w2_c"}));
    v.push_back(make_chain("W3", "the Chu1 blend written via the complementary weight",
                           "affine $chu1_p1 Q $w3_r1 A < T < affine 2/3 Q 1/3 A",
                           {"chu1_p1", "w3_r1"}));
    v.push_back(make_chain("Wang", "sharp Lehmer bounds for T", "L_0 < T < L_1/3"));
    v.push_back(make_chain("Chu2", "sharp argument-blended contraharmonic bounds for T",
                           "mix $chu2_p2 C < T < mix $chu2_q2 C", {"chu2_p2", "chu2_q2"}));
    v.push_back(make_chain("C-S", "power-mean refinement of the quadratic upper bound",
                           "N < A_3/2 < T < Q"));
    v.push_back(make_chain("4.0", "sharp members of the Q^2/L family around T",
                           "QL_5/3 < T < C"));
    v.push_back(make_chain("4.2", "upper-bound ladder above T",
                           "T < affine 2/3 Q 1/3 A < A_5/3 < L_1/3"));
    v.push_back(make_chain("Y2", "the refined ladder from the geometric to the 5/3 power mean",
                           "A_0 < L < A_1/3 < P < A_2/3 < I < A_1 < N < A_4/3 < T < A_5/3"));
    v.push_back(make_chain("4.1", "power-mean ladder around T with both critical orders",
                           "N < A_3/2 < A_$p1 < T < A_5/3 < A_2", {"p1"}));
    v.push_back(make_chain("Y1", "power-mean sandwich for the hyperbolic-sine mean",
                           "A_$p0 < N < A_4/3", {"p0"}));
    v.push_back(make_chain("ma", "sharp scaled power-mean envelope of T at order 5/3",
                           "scale $alpha1 A_5/3 < T < A_5/3", {"alpha1"}));
    v.push_back(make_chain("mb", "sharp scaled power-mean envelope of T at the critical lower order",
                           "A_$p1 < T < scale $beta2 A_$p1", {"p1", "beta2"}));
    return v;
  }();
  return catalog;
}

// Names of the core strict chains (the standard verification suite).
inline const std::vector<std::string>& core_chain_names() {
  static const std::vector<std::string> names = {
      "H-J", "Seiffert", "Sandor", "Chu1", "W1", "W2", "W3",
      "Wang", "Chu2",     "C-S",    "4.0",  "4.2", "Y2",
  };
  return names;
}

inline const ChainSpec& find_chain(const std::string& name) {
  for (const ChainSpec& c : chain_catalog())
    if (c.name == name) return c;
  throw std::out_of_range("unknown chain: " + name);
}

// Convenience wrappers that resolve registry constants automatically.
inline ChainReport verify_named_chain(const std::string& name, unsigned digits = 50,
                                      const GridSpec& grid = {}) {
  return verify_chain(find_chain(name), digits, grid, constant_value);
}

inline std::vector<ProfileRow> profile_named_chain(const std::string& name, unsigned digits = 50,
                                                   const GridSpec& grid = {}) {
  return margin_profile(find_chain(name), digits, grid, constant_value);
}

}  // namespace bimeans
