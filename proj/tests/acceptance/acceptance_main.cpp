// Acceptance gate: one line per criterion, [PASS] or [FAIL], exit 0 only if
// every criterion holds.  Each criterion exercises the public headers the way
// a downstream consumer would; thresholds and reference windows are the
// contract, so nothing here may be loosened to make a run green.

#include "bimeans/chains.hpp"
#include "bimeans/fixtures.hpp"
#include "bimeans/fp_analysis.hpp"
#include "bimeans/sharp_bounds.hpp"

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using bimeans::BigFloat;
using bimeans::GapAnalysis;
using bimeans::ScopedPrecision;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << number << ". " << title;
  if (!detail.empty()) std::cout << " — " << detail;
  std::cout << "\n";
  if (!ok) ++g_failures;
}

std::string fmt(const BigFloat& v, unsigned digits) { return bimeans::to_decimal(v, digits); }

// --- 1: the certified interior peak of the arctan-mean envelope ------------

void criterion_peak_location() {
  const auto t0 = Clock::now();
  bool ok = false;
  std::ostringstream detail;
  try {
    const auto rep = bimeans::sharp_report(bimeans::parse_term("T"), 50);
    const double elapsed = seconds_since(t0);
    const BigFloat lo("0.186930110570624"), hi("0.186930110570625");
    ok = rep.conclusive && rep.beta_x_star && rep.beta_x_star_residual &&
         *rep.beta_x_star > lo && *rep.beta_x_star < hi &&
         abs(*rep.beta_x_star_residual) < BigFloat("1e-40") && elapsed < 5.0;
    detail << "x_star = " << (rep.beta_x_star ? fmt(*rep.beta_x_star, 20) : "absent")
           << ", residual = "
           << (rep.beta_x_star_residual ? fmt(*rep.beta_x_star_residual, 3) : "absent") << ", "
           << elapsed << " s";
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(1, "peak location lands in the reference window with a tiny residual", ok, detail.str());
}

// --- 2: envelope constant equals a dense-grid maximum ----------------------

void criterion_envelope_vs_grid() {
  bool ok = false;
  std::ostringstream detail;
  try {
    ScopedPrecision prec(50);
    const BigFloat beta2 = bimeans::constant_value("beta2", 50);
    const GapAnalysis ga(bimeans::constant_value("p1", 50), 50);
    BigFloat grid_max(0);
    for (const BigFloat& x : bimeans::make_ratio_grid({100000, 1e-8})) {
      const BigFloat v = exp(ga.F(x));
      if (v > grid_max) grid_max = v;
    }
    const BigFloat gap = abs(beta2 - grid_max);
    ok = beta2 > BigFloat("1.0135") && beta2 < BigFloat("1.0137") && gap <= BigFloat("1e-10");
    detail << "beta2 = " << fmt(beta2, 20) << ", |beta2 - grid max| = " << fmt(gap, 3);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(2, "envelope constant matches the dense-grid ratio maximum", ok, detail.str());
}

// --- 3: closed-form scale constant ------------------------------------------

void criterion_scale_constant() {
  bool ok = false;
  std::ostringstream detail;
  try {
    ScopedPrecision prec(50);
    const BigFloat alpha1 = bimeans::constant_value("alpha1", 50);
    const BigFloat closed = pow(BigFloat(2), BigFloat(8) / 5) / bimeans::const_pi<BigFloat>();
    const BigFloat rel = abs(alpha1 / closed - 1);
    ok = rel < BigFloat("1e-12") && fmt(alpha1, 5) == "0.96494";
    detail << "alpha1 = " << fmt(alpha1, 20) << ", rel err vs 2^(8/5)/pi = " << fmt(rel, 3);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(3, "scale constant reproduces its closed form to 12+ digits", ok, detail.str());
}

// --- 4: critical exponents at both endpoints --------------------------------

void criterion_exponents() {
  bool ok = false;
  std::ostringstream detail;
  try {
    ScopedPrecision prec(50);
    const BigFloat ln2 = bimeans::const_ln2<BigFloat>();
    const BigFloat pi = bimeans::const_pi<BigFloat>();

    const auto t1 = bimeans::critical_exponent_at_one(bimeans::parse_term("T"), 50);
    const auto t0 = bimeans::critical_exponent_at_zero(bimeans::parse_term("T"), 50);
    const auto p1 = bimeans::critical_exponent_at_one(bimeans::parse_term("P"), 50);
    const auto p0 = bimeans::critical_exponent_at_zero(bimeans::parse_term("P"), 50);
    const auto n1 = bimeans::critical_exponent_at_one(bimeans::parse_term("N"), 50);
    const auto n0 = bimeans::critical_exponent_at_zero(bimeans::parse_term("N"), 50);

    const BigFloat tol6("1e-6"), tol9("1e-9");
    const bool t_ok = abs(t1.value - BigFloat(5) / 3) < tol6 &&
                      abs(t0.value - ln2 / log(pi / 2)) < tol9;
    const bool p_ok = abs(p1.value - BigFloat(2) / 3) < tol6 && abs(p0.value - ln2 / log(pi)) < tol6;
    const bool n_ok = abs(n1.value - BigFloat(4) / 3) < tol6 &&
                      abs(n0.value - ln2 / log(log(3 + 2 * sqrt(BigFloat(2))))) < tol6;
    ok = t_ok && p_ok && n_ok;
    detail << "T -> (" << fmt(t0.value, 12) << ", " << fmt(t1.value, 12) << "), P -> ("
           << fmt(p0.value, 8) << ", " << fmt(p1.value, 8) << "), N -> (" << fmt(n0.value, 8)
           << ", " << fmt(n1.value, 8) << ")";
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(4, "critical exponents at both endpoints hit their closed forms", ok, detail.str());
}

// --- 5: the core chain suite verifies on a dense grid -----------------------

void criterion_chain_suite() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::ostringstream detail;
  std::size_t verified = 0;
  try {
    for (const std::string& name : bimeans::core_chain_names()) {
      const auto rep = bimeans::verify_named_chain(name, 50, {10000, 1e-8});
      if (rep.status == bimeans::ChainStatus::verified_on_grid && rep.min_margin > 0) {
        ++verified;
      } else {
        ok = false;
        detail << name << ": " << to_string(rep.status) << "; ";
      }
    }
  } catch (const std::exception& e) {
    ok = false;
    detail << "exception: " << e.what();
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 60.0) ok = false;
  detail << verified << "/" << bimeans::core_chain_names().size() << " verified in " << elapsed
         << " s";
  report(5, "all 13 core chains verify on a 10^4-point grid at 50 digits", ok, detail.str());
}

// --- 6: deliberately false claims are refuted at the binding ends -----------

void criterion_falsification() {
  bool ok = false;
  std::ostringstream detail;
  try {
    bimeans::ChainSpec too_strong;
    too_strong.name = "T < A_1.6";
    too_strong.terms = "T < A_1.6";
    const auto high = bimeans::verify_chain(too_strong, 50, {2000, 1e-8});
    bool high_edge_witness = false;
    for (const auto& w : high.witnesses)
      if (w.x > BigFloat("0.9") && w.margin < 0) high_edge_witness = true;

    bimeans::ChainSpec too_weak;
    too_weak.name = "A_1.7 < T";
    too_weak.terms = "A_1.7 < T";
    const auto low = bimeans::verify_chain(too_weak, 50, {2000, 1e-8});
    bool low_edge_witness = false;
    for (const auto& w : low.witnesses)
      if (w.x < BigFloat("1e-6") && w.margin < 0) low_edge_witness = true;

    ok = high.status == bimeans::ChainStatus::counterexample && high_edge_witness &&
         low.status == bimeans::ChainStatus::counterexample && low_edge_witness;
    detail << "upper refuted with witness x > 0.9: " << (high_edge_witness ? "yes" : "no")
           << "; lower refuted with witness x < 1e-6: " << (low_edge_witness ? "yes" : "no");
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  report(6, "overtight claims are refuted with witnesses at the binding ends", ok, detail.str());
}

// --- 7: algebraic identity suite ---------------------------------------------

void criterion_identities() {
  bool ok = true;
  std::ostringstream detail;
  try {
    // quadratic pair transform: T(a,b) = P(x,y), A(x,y) = Q(a,b), G(x,y) = A(a,b)
    std::mt19937 rng(2012);
    std::uniform_real_distribution<double> logu(std::log(1e-6), std::log(1e6));
    double worst_pair = 0;
    for (int i = 0; i < 1000; ++i) {
      const double a = std::exp(logu(rng)), b = std::exp(logu(rng));
      const auto xy = bimeans::quadratic_pair_transform(a, b);
      const double e1 = std::fabs(bimeans::seiffert_p(xy.a, xy.b) / bimeans::seiffert_t(a, b) - 1);
      const double e2 =
          std::fabs(bimeans::arithmetic_mean(xy.a, xy.b) / bimeans::quadratic_mean(a, b) - 1);
      const double e3 =
          std::fabs(bimeans::geometric_mean(xy.a, xy.b) / bimeans::arithmetic_mean(a, b) - 1);
      worst_pair = std::max({worst_pair, e1, e2, e3});
    }
    if (worst_pair > 1e-13) ok = false;
    detail << "pair transform worst rel err " << worst_pair;

    ScopedPrecision prec(50);
    const BigFloat p53 = BigFloat(5) / 3;
    BigFloat worst_f2(0), worst_d1(0), worst_rel(0), worst_curv(0);
    for (int i = 1; i <= 200; ++i) {
      const BigFloat x = BigFloat(i) / 201;
      // cube-root substitution factorization of f2 at the boundary order
      const BigFloat t = pow(x, BigFloat(1) / 3);
      const BigFloat lhs = 3 * pow(x, BigFloat(4) / 3) * bimeans::log_gap_f2(p53, x);
      const BigFloat rhs = 2 * pow(1 - t, 3) * (t * t + 1) *
                           (pow(t, 4) + 3 * pow(t, 3) + 5 * t * t + 3 * t + 1);
      worst_f2 = std::max(worst_f2, BigFloat(abs(lhs - rhs)));
      // rationalized difference-of-squares form of the quartic auxiliary
      const BigFloat direct = (1 + x) * sqrt((pow(x, 6) + 1) / 2) - 2 * x * x;
      const BigFloat factored =
          pow(x - 1, 2) *
          (pow(x, 6) + 4 * pow(x, 5) + 8 * pow(x, 4) + 12 * pow(x, 3) + 8 * x * x + 4 * x + 1) /
          (2 * (1 + x) * sqrt((pow(x, 6) + 1) / 2) + 4 * x * x);
      worst_d1 = std::max(worst_d1, BigFloat(abs(direct - factored)));
    }
    if (worst_f2 > BigFloat("1e-30") || worst_d1 > BigFloat("1e-30")) ok = false;
    detail << "; f2 factorization " << fmt(worst_f2, 3) << "; quartic form " << fmt(worst_d1, 3);

    // x^{4-p} f2' = f3, by central difference
    const BigFloat h("1e-17");
    for (const char* ps : {"1.2", "1.5349", "1.6"}) {
      const BigFloat p(ps);
      for (const char* xs : {"0.2", "0.5", "0.8"}) {
        const BigFloat x(xs);
        const BigFloat df2 =
            (bimeans::log_gap_f2(p, x + h) - bimeans::log_gap_f2(p, x - h)) / (2 * h);
        worst_rel = std::max(
            worst_rel, BigFloat(abs(pow(x, 4 - p) * df2 - bimeans::log_gap_f3(p, x))));
      }
    }
    if (worst_rel > BigFloat("1e-10")) ok = false;
    detail << "; derivative relation " << fmt(worst_rel, 3);

    // closed-form curvature limit vs the numerical one
    for (const char* ps : {"1", "1.5349", "1.6", "2"}) {
      const BigFloat p(ps);
      const auto curv = GapAnalysis(p, 50).curvature_at_one();
      worst_curv =
          std::max(worst_curv, BigFloat(abs(curv.value - bimeans::log_gap_curvature_limit(p))));
    }
    if (worst_curv > BigFloat("1e-8")) ok = false;
    detail << "; curvature limit " << fmt(worst_curv, 3);
  } catch (const std::exception& e) {
    ok = false;
    detail << "exception: " << e.what();
  }
  report(7, "algebraic identity suite holds to its tolerances", ok, detail.str());
}

// --- 8: monotonicity suite ----------------------------------------------------

void criterion_monotonicity() {
  bool ok = true;
  std::ostringstream detail;
  try {
    // power mean strictly increasing in its order
    std::mt19937 rng(1736);
    std::uniform_real_distribution<double> logu(std::log(1e-6), std::log(1e6));
    std::uniform_real_distribution<double> rd(-4.0, 4.0);
    int order_ok = 0;
    for (int i = 0; i < 1000; ++i) {
      const double a = std::exp(logu(rng));
      double b = std::exp(logu(rng));
      if (a == b) b *= 1.5;
      double r = rd(rng), s = rd(rng);
      if (r == s) continue;
      if (r > s) std::swap(r, s);
      if (bimeans::power_mean(r, a, b) < bimeans::power_mean(s, a, b)) ++order_ok;
    }
    if (order_ok < 999) ok = false;
    detail << "order monotonicity " << order_ok << "/1000";

    // the log-ratio is increasing at the top boundary order and decreasing at
    // the bottom one
    ScopedPrecision prec(50);
    const auto grid = bimeans::make_ratio_grid({10000, 1e-8});
    bool up_ok = true, down_ok = true;
    BigFloat prev_up = bimeans::log_gap(BigFloat(5) / 3, grid.front());
    BigFloat prev_dn = bimeans::log_gap(BigFloat(1), grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const BigFloat up = bimeans::log_gap(BigFloat(5) / 3, grid[i]);
      const BigFloat dn = bimeans::log_gap(BigFloat(1), grid[i]);
      if (!(up > prev_up)) up_ok = false;
      if (!(dn < prev_dn)) down_ok = false;
      prev_up = up;
      prev_dn = dn;
    }
    if (!up_ok || !down_ok) ok = false;
    detail << "; top-order ratio increasing: " << (up_ok ? "yes" : "no")
           << "; bottom-order decreasing: " << (down_ok ? "yes" : "no");

    // the quadratic-over-Lehmer family is decreasing in its order
    std::uniform_real_distribution<double> pd(1.0, 2.0);
    int family_ok = 0, family_n = 0;
    for (int i = 0; i < 1000; ++i) {
      const double a = std::exp(logu(rng)), b = std::exp(logu(rng));
      double p = pd(rng), q = pd(rng);
      if (p == q || a == b) continue;
      if (p > q) std::swap(p, q);
      ++family_n;
      if (bimeans::q2_over_lehmer(p, a, b) > bimeans::q2_over_lehmer(q, a, b)) ++family_ok;
    }
    if (family_ok != family_n) ok = false;
    detail << "; family monotonicity " << family_ok << "/" << family_n;
  } catch (const std::exception& e) {
    ok = false;
    detail << "exception: " << e.what();
  }
  report(8, "monotonicity suite holds everywhere sampled", ok, detail.str());
}

}  // namespace

int main() {
  criterion_peak_location();
  criterion_envelope_vs_grid();
  criterion_scale_constant();
  criterion_exponents();
  criterion_chain_suite();
  criterion_falsification();
  criterion_identities();
  criterion_monotonicity();
  if (g_failures > 0) {
    std::cout << g_failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
