#include "bimeans/fp_analysis.hpp"

#include "test_support.hpp"

#include <cmath>
#include <stdexcept>

using bimeans::BigFloat;
using bimeans::GapAnalysis;
using bimeans::ScopedPrecision;
using testsup::big;
using testsup::rel_err;

namespace {

BigFloat order_p1() {  // ln2 / ln(pi/2), the unique order with zero limit at 0+
  return bimeans::const_ln2<BigFloat>() / log(bimeans::const_pi<BigFloat>() / 2);
}

}  // namespace

TEST_CASE("closed-form limits", "[fp]") {
  ScopedPrecision prec(50);
  CHECK(bimeans::log_gap_curvature_limit(BigFloat(5) / 3) == 0);
  CHECK(bimeans::log_gap_curvature_limit(BigFloat(1)) == BigFloat(2) / 24);
  CHECK(bimeans::log_gap_curvature_limit(BigFloat(2)) == -BigFloat(1) / 24);
  CHECK(bimeans::log_gap_zero_limit(BigFloat(0)) ==
        std::numeric_limits<BigFloat>::infinity());
  CHECK(bimeans::log_gap_zero_limit(BigFloat(-2)) ==
        std::numeric_limits<BigFloat>::infinity());
  // at the order ln2/ln(pi/2) the zero limit vanishes by construction
  CHECK(abs(bimeans::log_gap_zero_limit(order_p1())) < big("1e-49"));
}

TEST_CASE("frozen cascade values", "[fp]") {
  ScopedPrecision prec(50);
  const BigFloat p32 = BigFloat(3) / 2, x14 = BigFloat(1) / 4;
  // at p = 3/2, x = 1/4 every power is dyadic
  CHECK(rel_err(bimeans::log_gap_f2(p32, x14), big("0.1875")) < big("1e-45"));
  CHECK(rel_err(bimeans::log_gap_f3(p32, x14), big("-0.37109375")) < big("1e-45"));
  CHECK(rel_err(bimeans::log_gap_f1(p32, x14),
                big("-0.0110077355647018025024018940203646160175011926")) < big("1e-42"));
  CHECK(rel_err(bimeans::log_gap(order_p1(), big("0.3")),
                big("0.0117814195780581666034183804445800220671227384")) < big("1e-42"));
  CHECK(rel_err(bimeans::log_gap(big("1.6"), big("0.99")),
                big("0.000000841674465078167285616767353811")) < big("1e-28"));
}

TEST_CASE("interior maximum location and certificate", "[fp]") {
  ScopedPrecision prec(50);
  GapAnalysis g(order_p1(), 50);
  const auto r = g.find_x3();
  CHECK(rel_err(r.root.root, big("0.18693011057062474320079593557100616332797726")) <
        big("1e-42"));
  CHECK(r.root.lo > big("0.186930110570624"));
  CHECK(r.root.hi < big("0.186930110570625"));
  CHECK(r.root.hi - r.root.lo <= big("1e-45"));
  CHECK(abs(r.root.residual) < big("1e-40"));
  CHECK(r.sign_ok);
  CHECK(rel_err(g.peak_ratio(), big("1.01355643739421970945879981523669453343040425")) <
        big("1e-42"));
}

TEST_CASE("interior maximum across the order range", "[fp]") {
  ScopedPrecision prec(50);
  const struct {
    const char* p;
    const char* x3;
    const char* peak;
  } cases[] = {
      {"1.4", "0.0540577951330029416205155550498738062080808665",
       "1.04840444633592303120149065273218903975910999"},
      {"1.6", "0.332743542443539110802352703062165293207499128",
       "1.00381985052692393945946929385584410656284478"},
      {"1.65", "0.595006736864277671920551427359510381189530545",
       "1.00026136073026032081273596475561007464320702"},
      {"1.66", "0.722764306538229151630392103855802818812786491",
       "1.00004267162323952108713467021354680896148137"},
  };
  for (const auto& c : cases) {
    GapAnalysis g(big(c.p), 50);
    const auto r = g.find_x3();
    CHECK(rel_err(r.root.root, big(c.x3)) < big("1e-42"));
    CHECK(r.sign_ok);
    CHECK(rel_err(g.peak_ratio(), big(c.peak)) < big("1e-42"));
  }
}

TEST_CASE("auxiliary sign changes are ordered", "[fp]") {
  ScopedPrecision prec(50);
  GapAnalysis g(order_p1(), 50);
  const auto aux = g.find_auxiliary_roots();
  CHECK(rel_err(aux.x2.root, big("0.314784674539605675020343559208512262862230101")) <
        big("1e-42"));
  CHECK(rel_err(aux.x1.root, big("0.503441151537903260736306526970424358192017075")) <
        big("1e-42"));
  CHECK(aux.ordered);
}

TEST_CASE("derivative identities by central difference", "[fp]") {
  ScopedPrecision prec(50);
  const BigFloat h = big("1e-17");  // balances h^2 truncation vs eps/h roundoff
  const std::vector<BigFloat> ps = {big("1.2"), order_p1(), big("1.6")};
  const std::vector<BigFloat> xs = {big("0.15"), big("0.3"), big("0.55"), big("0.8")};
  for (const auto& p : ps) {
    for (const auto& x : xs) {
      // sgn-carrying factorization of F':
      // F' = (x^{p-1}+1) / ((1-x)(x^p+1) atan((1-x)/(1+x))) * f1
      const BigFloat dF = (bimeans::log_gap(p, x + h) - bimeans::log_gap(p, x - h)) / (2 * h);
      const BigFloat pref =
          (pow(x, p - 1) + 1) / ((1 - x) * (pow(x, p) + 1) * atan((1 - x) / (1 + x)));
      CHECK(rel_err(dF, pref * bimeans::log_gap_f1(p, x)) < big("1e-28"));

      // f1' = -x(1-x) / ((x^2+1)^2 (x^{p-1}+1)^2) * f2
      const BigFloat df1 =
          (bimeans::log_gap_f1(p, x + h) - bimeans::log_gap_f1(p, x - h)) / (2 * h);
      const BigFloat d1 = (x * x + 1) * (pow(x, p - 1) + 1);
      CHECK(rel_err(df1, -x * (1 - x) / (d1 * d1) * bimeans::log_gap_f2(p, x)) < big("1e-28"));

      // x^{4-p} f2' = f3
      const BigFloat df2 =
          (bimeans::log_gap_f2(p, x + h) - bimeans::log_gap_f2(p, x - h)) / (2 * h);
      CHECK(rel_err(pow(x, 4 - p) * df2, bimeans::log_gap_f3(p, x)) < big("1e-28"));

      // f4 replaces x^{p-1} in f3' by its tangent-line bound; the coefficient
      // -2p(2p-3) flips sign at p = 3/2, and the comparison direction with it
      const BigFloat df3 =
          (bimeans::log_gap_f3(p, x + h) - bimeans::log_gap_f3(p, x - h)) / (2 * h);
      if (p >= BigFloat(3) / 2)
        CHECK(df3 > bimeans::log_gap_f4(p, x) - big("1e-30"));
      else
        CHECK(df3 < bimeans::log_gap_f4(p, x) + big("1e-30"));
      CHECK(bimeans::log_gap_f4(p, x) > 0);
    }
  }
}

TEST_CASE("f3 is increasing on (0,1) across the order range", "[fp]") {
  ScopedPrecision prec(40);
  for (const char* ps : {"1.2", "1.5", "1.6"}) {
    const BigFloat p = big(ps);
    const int n = 100;
    BigFloat prev = bimeans::log_gap_f3(p, BigFloat(1) / (n + 1));
    for (int i = 2; i <= n; ++i) {
      const BigFloat v = bimeans::log_gap_f3(p, BigFloat(i) / (n + 1));
      CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("quadratic minorant endpoint values", "[fp]") {
  ScopedPrecision prec(50);
  for (const char* ps : {"1.1", "1.3", "1.5", "1.65"}) {
    const BigFloat p = big(ps);
    const BigFloat at0 = bimeans::log_gap_f4(p, big("1e-30"));
    const BigFloat at1 = bimeans::log_gap_f4(p, 1 - big("1e-40"));
    CHECK(rel_err(at0, (p - 2) * (4 * p * p - 7 * p - 1)) < big("1e-25"));
    CHECK(rel_err(at1, 6 * p * (BigFloat(5) / 3 - p)) < big("1e-25"));
  }
}

TEST_CASE("limit cross-checks by extrapolation", "[fp]") {
  ScopedPrecision prec(50);
  for (const char* ps : {"0.5", "1", "1.6", "2"}) {
    const BigFloat p = big(ps);
    GapAnalysis g(p, 50);
    const auto curv = g.curvature_at_one();
    CHECK(rel_err(curv.value, bimeans::log_gap_curvature_limit(p)) < big("1e-30"));
    const auto zero = g.gap_at_zero();
    CHECK(abs(zero.value - bimeans::log_gap_zero_limit(p)) < big("1e-12"));
  }
  // the boundary order 5/3 has vanishing curvature: check absolutely
  GapAnalysis g53(BigFloat(5) / 3, 50);
  CHECK(abs(g53.curvature_at_one().value) < big("1e-35"));
}

TEST_CASE("monotonicity at the boundary orders", "[fp]") {
  ScopedPrecision prec(40);
  const int n = 200;
  BigFloat prev_up = bimeans::log_gap(BigFloat(5) / 3, BigFloat(1) / (n + 1));
  BigFloat prev_dn = bimeans::log_gap(BigFloat(1), BigFloat(1) / (n + 1));
  for (int i = 2; i <= n; ++i) {
    const BigFloat x = BigFloat(i) / (n + 1);
    const BigFloat up = bimeans::log_gap(BigFloat(5) / 3, x);
    const BigFloat dn = bimeans::log_gap(BigFloat(1), x);
    CHECK(up > prev_up);
    CHECK(dn < prev_dn);
    prev_up = up;
    prev_dn = dn;
  }
}

TEST_CASE("domain and precondition errors", "[fp]") {
  ScopedPrecision prec(40);
  CHECK_THROWS_AS(bimeans::log_gap(BigFloat(1), BigFloat(0)), std::domain_error);
  CHECK_THROWS_AS(bimeans::log_gap(BigFloat(1), BigFloat(1)), std::domain_error);
  CHECK_THROWS_AS(bimeans::log_gap_f1(BigFloat(1), BigFloat(2)), std::domain_error);
  CHECK_THROWS_AS(GapAnalysis(BigFloat(1.5), 20), std::invalid_argument);
  CHECK_THROWS_AS(GapAnalysis(BigFloat(2), 50).find_x3(), std::domain_error);
  CHECK_THROWS_AS(GapAnalysis(BigFloat(1), 50).find_x3(), std::domain_error);
  CHECK_THROWS_AS(GapAnalysis(BigFloat(5) / 3, 50).find_auxiliary_roots(), std::domain_error);
}

TEST_CASE("double tier agrees with the extended tier", "[fp]") {
  const double p = 1.6, x = 0.37;
  ScopedPrecision prec(50);
  CHECK(rel_err(bimeans::log_gap(p, x),
                static_cast<double>(bimeans::log_gap(BigFloat(p), BigFloat(x)))) < 1e-13);
  CHECK(rel_err(bimeans::log_gap_f2(p, x),
                static_cast<double>(bimeans::log_gap_f2(BigFloat(p), BigFloat(x)))) < 1e-12);
}
