// bimeans — evaluate bivariate means, certify sharp power-mean bounds, and
// verify strict inequality chains on a deterministic ratio grid.
//
// Subcommands:
//   eval EXPR A B     evaluate a mean term at positive arguments
//   sharp MEAN        critical power-mean orders and envelope constants
//   verify TARGET     check a named chain, every chain in a file, or --expr
//   profile TARGET    per-pair log-margin table (CSV)
//   constants         the built-in constant registry with formulas
//
// Global flags: --precision N (>= 30; the MEANS_PRECISION environment
// variable overrides the default of 50), --grid N (>= 64), --format
// {text,csv,json}, --chain-file PATH, --seed N (randomized identity
// spot-checks on eval; diagnostics go to the error stream only).
//
// Exit codes: 0 success/verified, 1 counterexample, 2 inconclusive,
// 64 usage error.  All standard output is deterministic for a fixed
// configuration; JSON output re-renders byte-identically after parsing.

#include "bimeans/chain_io.hpp"
#include "bimeans/chains.hpp"
#include "bimeans/fixtures.hpp"
#include "bimeans/sharp_bounds.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using bimeans::BigFloat;
using bimeans::ChainReport;
using bimeans::ChainSpec;
using bimeans::ChainStatus;
using bimeans::GridSpec;
using bimeans::MeanExpr;
using bimeans::ScopedPrecision;
using bimeans::to_decimal;
using json = nlohmann::json;

struct RunConfig {
  unsigned precision = 50;
  int grid_points = 10000;
  std::string format = "text";  // text | csv | json
  std::string chain_file;
  std::uint64_t seed = 0;
  bool seed_given = false;
};

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 64;
}

// ---------------------------------------------------------------- output ---

// RFC-4180-style cell: quoted when it contains a comma, quote, space, or
// newline; embedded quotes doubled.  Fields are joined with ',' and rows end
// with a bare LF.
std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\" \n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void csv_row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) std::cout << ",";
    std::cout << csv_cell(cells[i]);
  }
  std::cout << "\n";
}

// Canonical JSON rendering: objects keep alphabetically sorted keys (the
// library's default), two-space indent, trailing newline.  Parsing this text
// and re-rendering it the same way reproduces it byte for byte.
void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Number of leading significant digits of `value` justified by the absolute
// error bound `err`, capped at digits-2 (working-precision headroom).
unsigned certified_digits(const BigFloat& value, const BigFloat& err, unsigned digits) {
  const unsigned cap = digits >= 3 ? digits - 2 : 1;
  if (!(err > 0)) return cap;
  const BigFloat mag = abs(value);
  const BigFloat rel = mag > 0 ? BigFloat(err / mag) : err;
  if (!(rel < 1)) return 1;
  long n = static_cast<long>(floor(-log10(rel)).convert_to<long>());
  if (n < 1) n = 1;
  if (n > static_cast<long>(cap)) n = static_cast<long>(cap);
  return static_cast<unsigned>(n);
}

// "terms[i] < terms[i+1]" labels in canonical spelling, for table headers.
std::vector<std::string> pair_labels(const std::string& terms_text) {
  const std::vector<MeanExpr> terms = bimeans::parse_chain_terms(terms_text);
  std::vector<std::string> out;
  for (std::size_t i = 0; i + 1 < terms.size(); ++i)
    out.push_back(bimeans::to_text(terms[i]) + " < " + bimeans::to_text(terms[i + 1]));
  return out;
}

// ------------------------------------------------------------------ eval ---

BigFloat parse_positive_argument(const std::string& text) {
  const bimeans::ExprNum num = bimeans::detail::parse_num_token(text);
  if (num.kind == bimeans::ExprNum::Kind::symbol)
    throw std::invalid_argument("arguments must be numeric, got '" + text + "'");
  const BigFloat v = num.value<BigFloat>({});
  bimeans::check_positive(v, v);
  return v;
}

// Randomized self-checks around the requested evaluation: scaling invariance
// M(lambda a, lambda b) = lambda M(a,b) and symmetry M(b,a) = M(a,b).  The
// primary printed value is deterministic and seed-independent; these probes
// report to the error stream only.
void eval_spot_checks(const MeanExpr& e, const BigFloat& a, const BigFloat& b, const BigFloat& v,
                      const RunConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  const BigFloat tol = bimeans::pow10_neg(static_cast<long>(cfg.precision) - 8);
  bool ok = true;

  const BigFloat swapped = eval(e, b, a, {});
  if (!(abs(swapped - v) <= abs(v) * tol)) {
    ok = false;
    std::cerr << "warning: symmetry spot-check failed: M(b,a) deviates by "
              << to_decimal(abs(swapped - v), 3) << "\n";
  }
  for (int k = 0; k < 4; ++k) {
    // lambda in [1/2, 2), from the top 53 bits of the draw
    const BigFloat lam = BigFloat(1) / 2 +
                         BigFloat(3) / 2 * BigFloat(rng() >> 11) / BigFloat(INT64_C(1) << 53);
    const BigFloat scaled = eval(e, lam * a, lam * b, {});
    if (!(abs(scaled / (lam * v) - 1) < tol)) {
      ok = false;
      std::cerr << "warning: scaling spot-check failed at lambda = " << to_decimal(lam, 17)
                << "\n";
    }
  }
  if (ok && cfg.seed_given)
    std::cerr << "identity spot-checks passed (1 symmetry, 4 scaling probes; seed " << cfg.seed
              << ")\n";
}

int cmd_eval(const std::string& expr_text, const std::string& a_text, const std::string& b_text,
             const RunConfig& cfg) {
  ScopedPrecision prec(cfg.precision);
  MeanExpr e;
  BigFloat a, b, v;
  try {
    e = bimeans::parse_term(expr_text);
    a = parse_positive_argument(a_text);
    b = parse_positive_argument(b_text);
    v = eval(e, a, b, {});
  } catch (const std::domain_error& err) {
    return usage_error(err.what());
  }
  const std::string value = to_decimal(v, cfg.precision);

  if (cfg.format == "csv") {
    csv_row({"expression", "a", "b", "value"});
    csv_row({bimeans::to_text(e), a_text, b_text, value});
  } else if (cfg.format == "json") {
    json j;
    j["a"] = a_text;
    j["b"] = b_text;
    j["digits"] = cfg.precision;
    j["expression"] = bimeans::to_text(e);
    j["value"] = value;
    print_json(j);
  } else {
    std::cout << value << "\n";
  }
  eval_spot_checks(e, a, b, v, cfg);
  return 0;
}

// ----------------------------------------------------------------- sharp ---

int cmd_sharp(const std::string& mean_text, const RunConfig& cfg) {
  bimeans::SharpBoundReport rep;
  try {
    const MeanExpr e = bimeans::parse_term(mean_text);
    rep = bimeans::sharp_report(e, cfg.precision);
  } catch (const std::domain_error& err) {
    std::cerr << "inconclusive: " << err.what() << "\n";
    return 2;
  } catch (const std::runtime_error& err) {
    std::cerr << "inconclusive: " << err.what() << "\n";
    return 2;
  }

  // Error budgets.  Endpoint-limit quantities inherit the at-zero
  // extrapolation estimate; the at-one exponent maps its curvature residual
  // through the affine slope (|dm2/dq| = 1/8); both carry a 10x safety
  // factor.  An x->1 envelope limit is exactly 1, so only working precision
  // binds there.  Interior envelope values are quadratically insensitive to
  // the peak location but ride on the program's own critical order at first
  // order, so they inherit the weaker of the two exponent certificates.
  const BigFloat zero_err = 10 * rep.zero_limit_error;
  const BigFloat one_err = 10 * rep.curvature_residual;
  const BigFloat exact(0);
  const BigFloat lower_err = rep.lower_binding == "x->0+" ? zero_err : one_err;
  const BigFloat upper_err = rep.upper_binding == "x->0+" ? zero_err : one_err;
  const BigFloat interior_err = std::max(lower_err, upper_err);
  const auto envelope_err = [&](const std::string& binding) {
    if (binding == "x->0+") return zero_err;
    if (binding == "x->1") return exact;
    return interior_err;
  };
  const BigFloat alpha_err = envelope_err(rep.alpha_binding);
  const BigFloat beta_err = envelope_err(rep.beta_binding);
  // The peak location rides on the computed order at first order, so it is
  // only as certain as the order itself (unlike the peak value).
  BigFloat xstar_err = lower_err;
  if (rep.beta_x_star_bracket)
    xstar_err = std::max(xstar_err, rep.beta_x_star_bracket->second - rep.beta_x_star_bracket->first);

  struct Row {
    std::string field;
    BigFloat value;
    unsigned cert;
    std::string binding;
  };
  std::vector<Row> rows = {
      {"p_lower", rep.p_lower, certified_digits(rep.p_lower, lower_err, cfg.precision),
       rep.lower_binding},
      {"p_upper", rep.p_upper, certified_digits(rep.p_upper, upper_err, cfg.precision),
       rep.upper_binding},
      {"alpha", rep.alpha, certified_digits(rep.alpha, alpha_err, cfg.precision),
       rep.alpha_binding},
      {"beta", rep.beta, certified_digits(rep.beta, beta_err, cfg.precision), rep.beta_binding},
  };
  if (rep.beta_x_star)
    rows.push_back({"x_star", *rep.beta_x_star,
                    certified_digits(*rep.beta_x_star, xstar_err, cfg.precision), "interior"});

  if (cfg.format == "csv") {
    csv_row({"field", "value", "certified_digits", "binding"});
    csv_row({"mean", rep.mean, "", ""});
    csv_row({"digits", std::to_string(rep.digits), "", ""});
    for (const Row& r : rows)
      csv_row({r.field, to_decimal(r.value, r.cert), std::to_string(r.cert), r.binding});
    if (rep.beta_x_star_bracket) {
      csv_row({"x_star_bracket_lo", to_decimal(rep.beta_x_star_bracket->first, cfg.precision - 2),
               "", ""});
      csv_row({"x_star_bracket_hi", to_decimal(rep.beta_x_star_bracket->second, cfg.precision - 2),
               "", ""});
    }
    if (rep.beta_x_star_residual)
      csv_row({"x_star_residual", to_decimal(*rep.beta_x_star_residual, 3), "", ""});
    csv_row({"sweep_min_lower_margin", to_decimal(rep.sweep_min_lower_margin, 3), "", ""});
    csv_row({"sweep_min_upper_margin", to_decimal(rep.sweep_min_upper_margin, 3), "", ""});
    csv_row({"sweep_points", std::to_string(rep.sweep_points), "", ""});
    csv_row({"conclusive", rep.conclusive ? "true" : "false", "", ""});
    csv_row({"note", rep.note, "", ""});
  } else if (cfg.format == "json") {
    json j;
    j["mean"] = rep.mean;
    j["digits"] = rep.digits;
    j["conclusive"] = rep.conclusive;
    j["note"] = rep.note;
    for (const Row& r : rows) {
      json f;
      f["value"] = to_decimal(r.value, r.cert);
      f["certified_digits"] = r.cert;
      f["binding"] = r.binding;
      j[r.field] = f;
    }
    if (rep.beta_x_star_bracket)
      j["x_star"]["bracket"] = {to_decimal(rep.beta_x_star_bracket->first, cfg.precision - 2),
                                to_decimal(rep.beta_x_star_bracket->second, cfg.precision - 2)};
    if (rep.beta_x_star_residual)
      j["x_star"]["residual"] = to_decimal(*rep.beta_x_star_residual, 3);
    json sweep;
    sweep["min_lower_margin"] = to_decimal(rep.sweep_min_lower_margin, 3);
    sweep["min_upper_margin"] = to_decimal(rep.sweep_min_upper_margin, 3);
    sweep["points"] = rep.sweep_points;
    j["sweep"] = sweep;
    print_json(j);
  } else {
    std::cout << "mean: " << rep.mean << "\n";
    std::cout << "digits: " << rep.digits << "\n";
    for (const Row& r : rows)
      std::cout << r.field << " = " << to_decimal(r.value, r.cert) << " (certified " << r.cert
                << " digits; binding " << r.binding << ")\n";
    if (rep.beta_x_star_bracket)
      std::cout << "x_star bracket = [" << to_decimal(rep.beta_x_star_bracket->first, cfg.precision - 2)
                << ", " << to_decimal(rep.beta_x_star_bracket->second, cfg.precision - 2) << "]\n";
    if (rep.beta_x_star_residual)
      std::cout << "x_star residual = " << to_decimal(*rep.beta_x_star_residual, 3) << "\n";
    std::cout << "sweep minima: lower " << to_decimal(rep.sweep_min_lower_margin, 3) << ", upper "
              << to_decimal(rep.sweep_min_upper_margin, 3) << " (" << rep.sweep_points
              << " points)\n";
    if (!rep.conclusive) std::cout << "inconclusive: " << rep.note << "\n";
  }
  return rep.conclusive ? 0 : 2;
}

// ---------------------------------------------------------------- verify ---

// Targets, in lookup order: an ad-hoc --expr chain; a name from --chain-file
// (file entries shadow the catalog); a catalog name; a path to a chain file
// (all of its entries).
std::vector<ChainSpec> resolve_targets(const std::string& target, const std::string& expr_text,
                                       const std::string& chain_file) {
  std::vector<ChainSpec> loaded;
  if (!chain_file.empty()) {
    if (std::ifstream probe(chain_file); !probe)
      throw std::invalid_argument("cannot open chain file: " + chain_file);
    loaded = bimeans::load_chain_file(chain_file);
  }

  if (!expr_text.empty()) {
    if (!target.empty())
      throw std::invalid_argument("give either a chain name/file or --expr, not both");
    ChainSpec spec;
    spec.name = expr_text;
    spec.terms = expr_text;
    bimeans::parse_chain_terms(spec.terms);  // surface syntax errors as usage errors
    return {spec};
  }
  if (target.empty()) {
    if (!loaded.empty()) return loaded;  // no name: the whole --chain-file
    throw std::invalid_argument("expected a chain name, a chain file, or --expr");
  }
  for (const ChainSpec& c : loaded)
    if (c.name == target) return {c};
  for (const ChainSpec& c : bimeans::chain_catalog())
    if (c.name == target) return {c};
  if (std::ifstream probe(target); probe) return bimeans::load_chains(probe);
  throw std::invalid_argument("unknown chain or file: " + target);
}

int cmd_verify(const std::string& target, const std::string& expr_text, const RunConfig& cfg) {
  const std::vector<ChainSpec> specs = resolve_targets(target, expr_text, cfg.chain_file);
  const GridSpec grid{cfg.grid_points, 1e-8};

  bool any_counterexample = false, any_inconclusive = false;
  json jchains = json::array();
  if (cfg.format == "csv")
    csv_row({"chain", "status", "digits", "grid_points", "pairs", "min_margin", "argmin_x",
             "argmin_pair", "note", "witness_x", "witness_pair", "witness_left", "witness_right",
             "witness_margin"});

  bool first_block = true;
  for (const ChainSpec& spec : specs) {
    const ChainReport rep =
        bimeans::verify_chain(spec, cfg.precision, grid, bimeans::constant_value);
    const std::vector<std::string> labels = pair_labels(spec.terms);
    if (rep.status == ChainStatus::counterexample) any_counterexample = true;
    if (rep.status == ChainStatus::inconclusive) any_inconclusive = true;

    if (cfg.format == "csv") {
      const std::vector<std::string> head = {
          rep.name,
          to_string(rep.status),
          std::to_string(rep.digits),
          std::to_string(rep.grid_points),
          std::to_string(rep.pair_count),
          to_decimal(rep.min_margin, 6),
          to_decimal(rep.argmin_x, 20),
          labels[rep.argmin_pair],
          rep.note,
      };
      if (rep.witnesses.empty()) {
        std::vector<std::string> row = head;
        row.insert(row.end(), {"", "", "", "", ""});
        csv_row(row);
      } else {
        for (const bimeans::ChainWitness& w : rep.witnesses) {
          std::vector<std::string> row = head;
          row.insert(row.end(),
                     {to_decimal(w.x, 20), labels[w.pair_index], to_decimal(w.left_value, 20),
                      to_decimal(w.right_value, 20), to_decimal(w.margin, 6)});
          csv_row(row);
        }
      }
    } else if (cfg.format == "json") {
      json jc;
      jc["name"] = rep.name;
      jc["status"] = to_string(rep.status);
      jc["digits"] = rep.digits;
      jc["grid_points"] = rep.grid_points;
      jc["pair_count"] = rep.pair_count;
      jc["min_margin"] = to_decimal(rep.min_margin, 6);
      jc["argmin_x"] = to_decimal(rep.argmin_x, 20);
      jc["argmin_pair"] = labels[rep.argmin_pair];
      jc["note"] = rep.note;
      json jws = json::array();
      for (const bimeans::ChainWitness& w : rep.witnesses) {
        json jw;
        jw["x"] = to_decimal(w.x, 20);
        jw["pair"] = labels[w.pair_index];
        jw["left"] = to_decimal(w.left_value, 20);
        jw["right"] = to_decimal(w.right_value, 20);
        jw["margin"] = to_decimal(w.margin, 6);
        jws.push_back(jw);
      }
      jc["witnesses"] = jws;
      jchains.push_back(jc);
    } else {
      if (!first_block) std::cout << "\n";
      std::cout << "chain: " << rep.name << "\n";
      std::cout << "status: " << to_string(rep.status) << "\n";
      std::cout << "digits: " << rep.digits << "  grid points: " << rep.grid_points
                << "  adjacent pairs: " << rep.pair_count << "\n";
      std::cout << "min log-margin = " << to_decimal(rep.min_margin, 6) << " at x = "
                << to_decimal(rep.argmin_x, 20) << " (pair " << labels[rep.argmin_pair] << ")\n";
      if (!rep.witnesses.empty()) {
        std::cout << "witnesses (re-evaluated at " << 2 * rep.digits << " digits):\n";
        for (const bimeans::ChainWitness& w : rep.witnesses)
          std::cout << "  x = " << to_decimal(w.x, 20) << "  pair " << labels[w.pair_index]
                    << ": left " << to_decimal(w.left_value, 20) << ", right "
                    << to_decimal(w.right_value, 20) << ", log-margin "
                    << to_decimal(w.margin, 6) << "\n";
      }
      if (!rep.note.empty()) std::cout << "note: " << rep.note << "\n";
    }
    first_block = false;
  }
  if (cfg.format == "json") {
    json j;
    j["chains"] = jchains;
    print_json(j);
  }
  return any_counterexample ? 1 : (any_inconclusive ? 2 : 0);
}

// --------------------------------------------------------------- profile ---

int cmd_profile(const std::string& target, const std::string& expr_text, const RunConfig& cfg) {
  const std::vector<ChainSpec> specs = resolve_targets(target, expr_text, cfg.chain_file);
  if (specs.size() != 1)
    throw std::invalid_argument("profile needs exactly one chain, got " +
                                std::to_string(specs.size()));
  const ChainSpec& spec = specs.front();
  const std::vector<std::string> labels = pair_labels(spec.terms);
  const auto rows =
      bimeans::margin_profile(spec, cfg.precision, {cfg.grid_points, 1e-8},
                              bimeans::constant_value);

  bool nonpositive = false;
  for (const auto& row : rows)
    for (const BigFloat& m : row.margins)
      if (!(m > 0)) nonpositive = true;

  if (cfg.format == "json") {
    json j;
    j["chain"] = spec.name;
    j["digits"] = cfg.precision;
    j["pairs"] = labels;
    json jrows = json::array();
    for (const auto& row : rows) {
      json jr;
      jr["x"] = to_decimal(row.x, 17);
      json ms = json::array();
      for (const BigFloat& m : row.margins) ms.push_back(to_decimal(m, 17));
      jr["margins"] = ms;
      jrows.push_back(jr);
    }
    j["rows"] = jrows;
    print_json(j);
  } else {
    // text and csv coincide: the profile *is* a CSV table.
    std::vector<std::string> head = {"x"};
    head.insert(head.end(), labels.begin(), labels.end());
    csv_row(head);
    for (const auto& row : rows) {
      std::vector<std::string> cells = {to_decimal(row.x, 17)};
      for (const BigFloat& m : row.margins) cells.push_back(to_decimal(m, 17));
      csv_row(cells);
    }
  }
  return nonpositive ? 1 : 0;
}

// ------------------------------------------------------------- constants ---

int cmd_constants(const RunConfig& cfg) {
  const unsigned D = cfg.precision;
  ScopedPrecision prec(D);

  // One certified peak computation serves both the x3 bracket and beta2.
  const bimeans::GapAnalysis ga(bimeans::constant_value("p1", D), D);
  const auto x3cert = ga.find_x3();
  const BigFloat bracket_width = x3cert.root.hi - x3cert.root.lo;

  struct Row {
    std::string name;
    BigFloat value;
    unsigned cert;
    std::string formula;
    std::string note;
  };
  std::vector<Row> rows;
  for (const bimeans::ConstantInfo& info : bimeans::constant_catalog()) {
    Row r;
    r.name = info.name;
    r.formula = info.formula;
    r.value = bimeans::constant_value(info.name, D);
    if (info.name == "x3") {
      r.cert = certified_digits(r.value, bracket_width, D);
      r.note = "bracket [" + to_decimal(x3cert.root.lo, D - 2) + ", " +
               to_decimal(x3cert.root.hi, D - 2) + "]";
    } else {
      r.cert = certified_digits(r.value, BigFloat(0), D);
    }
    rows.push_back(std::move(r));
  }

  if (cfg.format == "csv") {
    csv_row({"name", "value", "certified_digits", "formula", "note"});
    for (const Row& r : rows)
      csv_row({r.name, to_decimal(r.value, r.cert), std::to_string(r.cert), r.formula, r.note});
  } else if (cfg.format == "json") {
    json j;
    j["digits"] = D;
    json jcs = json::array();
    for (const Row& r : rows) {
      json jc;
      jc["name"] = r.name;
      jc["value"] = to_decimal(r.value, r.cert);
      jc["certified_digits"] = r.cert;
      jc["formula"] = r.formula;
      if (r.name == "x3")
        jc["bracket"] = {to_decimal(x3cert.root.lo, D - 2), to_decimal(x3cert.root.hi, D - 2)};
      jcs.push_back(jc);
    }
    j["constants"] = jcs;
    print_json(j);
  } else {
    for (const Row& r : rows) {
      std::cout << r.name << " = " << to_decimal(r.value, r.cert) << " (certified " << r.cert
                << " digits)\n";
      std::cout << "    " << r.formula << "\n";
      if (!r.note.empty()) std::cout << "    " << r.note << "\n";
    }
  }
  return 0;
}

// ------------------------------------------------------------------ main ---

bool parse_env_precision(const std::string& s, unsigned& out, std::string& problem) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    problem = "MEANS_PRECISION must be a positive integer, got '" + s + "'";
    return false;
  }
  unsigned long v = 0;
  try {
    v = std::stoul(s);
  } catch (const std::exception&) {
    problem = "MEANS_PRECISION is out of range: " + s;
    return false;
  }
  if (v < 30 || v > 1000000) {
    problem = "MEANS_PRECISION must be between 30 and 1000000, got " + s;
    return false;
  }
  out = static_cast<unsigned>(v);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;

  CLI::App app{
      "bimeans: evaluate bivariate means, certify sharp power-mean bounds,\n"
      "and verify strict inequality chains on a deterministic ratio grid"};
  app.fallthrough();
  app.require_subcommand(1);

  auto* precision_opt =
      app.add_option("--precision", cfg.precision,
                     "working decimal digits (default 50; MEANS_PRECISION overrides the default)")
          ->check(CLI::Range(30, 1000000));
  app.add_option("--grid", cfg.grid_points, "ratio grid size (default 10000)")
      ->check(CLI::Range(64, 100000000));
  app.add_option("--format", cfg.format, "output format (default text)")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--chain-file", cfg.chain_file,
                 "load chain definitions from this file (entries shadow built-in names)");
  auto* seed_opt = app.add_option(
      "--seed", cfg.seed, "seed for the randomized identity spot-checks (diagnostics on stderr)");

  std::string eval_expr, eval_a, eval_b;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a mean or term expression at (a, b)");
  eval_cmd->add_option("expression", eval_expr, "mean name or prefix term, e.g. T or A_5/3")
      ->required();
  eval_cmd->add_option("a", eval_a, "first argument (> 0)")->required();
  eval_cmd->add_option("b", eval_b, "second argument (> 0)")->required();

  std::string sharp_mean;
  auto* sharp_cmd =
      app.add_subcommand("sharp", "critical power-mean orders and envelope constants for a mean");
  sharp_cmd->add_option("mean", sharp_mean, "mean name or prefix term")->required();

  std::string verify_target, verify_expr;
  auto* verify_cmd =
      app.add_subcommand("verify", "verify a strict chain (built-in name, file, or --expr)");
  verify_cmd->add_option("target", verify_target, "chain name or chain file path");
  verify_cmd->add_option("--expr", verify_expr, "ad-hoc chain, e.g. \"A < T < Q\"");

  std::string profile_target, profile_expr;
  auto* profile_cmd =
      app.add_subcommand("profile", "per-pair log-margin table over the ratio grid (CSV)");
  profile_cmd->add_option("target", profile_target, "chain name or single-chain file path");
  profile_cmd->add_option("--expr", profile_expr, "ad-hoc chain, e.g. \"A < T < Q\"");

  auto* constants_cmd =
      app.add_subcommand("constants", "print the built-in constants with formulas");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 64;
  }

  if (precision_opt->count() == 0) {
    if (const char* env = std::getenv("MEANS_PRECISION")) {
      std::string problem;
      if (!parse_env_precision(env, cfg.precision, problem)) return usage_error(problem);
    }
  }
  cfg.seed_given = seed_opt->count() > 0;

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_expr, eval_a, eval_b, cfg);
    if (sharp_cmd->parsed()) return cmd_sharp(sharp_mean, cfg);
    if (verify_cmd->parsed()) return cmd_verify(verify_target, verify_expr, cfg);
    if (profile_cmd->parsed()) return cmd_profile(profile_target, profile_expr, cfg);
    if (constants_cmd->parsed()) return cmd_constants(cfg);
  } catch (const bimeans::ParseError& e) {
    return usage_error(e.what());
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::out_of_range& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 70;
  }
  return usage_error("no subcommand given");
}
