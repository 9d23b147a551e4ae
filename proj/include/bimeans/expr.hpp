#pragma once

// Mean expression trees and their prefix text form.
//
// A term is either a named mean leaf or one of four combinators, each of
// which preserves symmetry in (a,b) and homogeneity of degree 1:
//
//   leaf        A | G | Q | C | T | P | N | L | I
//               A_<num>   power mean of the given order
//               L_<num>   Lehmer mean of the given order
//               QL_<num>  Q^2 / L_{p-1} family member
//   scale  c t              c * value(t)
//   affine c1 t1 c2 t2      c1 * value(t1) + c2 * value(t2)
//   mix    w t              value of t on the blended pair (wa+(1-w)b, wb+(1-w)a)
//   gpow   w t1 t2          value(t1)^w * value(t2)^(1-w)
//
// <num> is an exact literal: a rational p/q, a decimal, or a $symbol bound
// through a parameter map at evaluation time.  Literals are stored exactly
// (never round-tripped through double) so a tree evaluates faithfully at any
// working precision.

#include "bimeans/means.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace bimeans {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Real>
Real real_from_string(const std::string& s);

template <>
inline double real_from_string<double>(const std::string& s) {
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw ParseError("bad numeric literal: " + s);
  return v;
}

template <>
inline BigFloat real_from_string<BigFloat>(const std::string& s) {
  try {
    return BigFloat(s);
  } catch (const std::exception&) {
    throw ParseError("bad numeric literal: " + s);
  }
}

template <class Real>
using ParamMap = std::map<std::string, Real>;

// Exact numeric literal.
struct ExprNum {
  enum class Kind { rational, decimal, symbol };
  Kind kind = Kind::rational;
  long long num = 0;
  long long den = 1;
  std::string text;  // decimal literal or symbol name (no '$')

  bool operator==(const ExprNum&) const = default;

  static ExprNum rational(long long n, long long d = 1) {
    if (d == 0) throw ParseError("rational literal with zero denominator");
    ExprNum e;
    e.kind = Kind::rational;
    e.num = n;
    e.den = d;
    return e;
  }
  static ExprNum decimal(std::string s) {
    ExprNum e;
    e.kind = Kind::decimal;
    e.text = std::move(s);
    return e;
  }
  static ExprNum symbol(std::string s) {
    ExprNum e;
    e.kind = Kind::symbol;
    e.text = std::move(s);
    return e;
  }

  template <class Real>
  Real value(const ParamMap<Real>& params) const {
    switch (kind) {
      case Kind::rational:
        return Real(num) / Real(den);
      case Kind::decimal:
        return real_from_string<Real>(text);
      case Kind::symbol: {
        auto it = params.find(text);
        if (it == params.end()) throw std::out_of_range("unbound symbol: $" + text);
        return it->second;
      }
    }
    throw std::logic_error("unreachable");
  }

  std::string str() const {
    switch (kind) {
      case Kind::rational:
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
      case Kind::decimal:
        return text;
      case Kind::symbol:
        return "$" + text;
    }
    throw std::logic_error("unreachable");
  }
};

struct MeanExpr {
  enum class Node { leaf, scale, affine, mix, gpow };
  enum class Leaf {
    arithmetic,
    geometric,
    quadratic,
    contraharmonic,
    seiffert_t,
    seiffert_p,
    neuman_sandor,
    logarithmic,
    identric,
    power,
    lehmer,
    q2_lehmer
  };

  Node node = Node::leaf;
  Leaf leaf = Leaf::arithmetic;
  ExprNum order;   // power / lehmer / q2_lehmer leaves
  ExprNum w1, w2;  // combinator coefficients
  std::vector<MeanExpr> kids;

  bool operator==(const MeanExpr&) const = default;

  static MeanExpr named(Leaf k) {
    MeanExpr e;
    e.leaf = k;
    return e;
  }
  static MeanExpr power(ExprNum r) {
    MeanExpr e;
    e.leaf = Leaf::power;
    e.order = std::move(r);
    return e;
  }
  static MeanExpr lehmer(ExprNum r) {
    MeanExpr e;
    e.leaf = Leaf::lehmer;
    e.order = std::move(r);
    return e;
  }
  static MeanExpr q2_lehmer(ExprNum p) {
    MeanExpr e;
    e.leaf = Leaf::q2_lehmer;
    e.order = std::move(p);
    return e;
  }
  static MeanExpr scale(ExprNum c, MeanExpr t) {
    MeanExpr e;
    e.node = Node::scale;
    e.w1 = std::move(c);
    e.kids.push_back(std::move(t));
    return e;
  }
  static MeanExpr affine(ExprNum c1, MeanExpr t1, ExprNum c2, MeanExpr t2) {
    MeanExpr e;
    e.node = Node::affine;
    e.w1 = std::move(c1);
    e.w2 = std::move(c2);
    e.kids.push_back(std::move(t1));
    e.kids.push_back(std::move(t2));
    return e;
  }
  static MeanExpr mix(ExprNum w, MeanExpr t) {
    MeanExpr e;
    e.node = Node::mix;
    e.w1 = std::move(w);
    e.kids.push_back(std::move(t));
    return e;
  }
  static MeanExpr gpow(ExprNum w, MeanExpr t1, MeanExpr t2) {
    MeanExpr e;
    e.node = Node::gpow;
    e.w1 = std::move(w);
    e.kids.push_back(std::move(t1));
    e.kids.push_back(std::move(t2));
    return e;
  }
};

template <class Real>
Real eval(const MeanExpr& e, const Real& a, const Real& b, const ParamMap<Real>& params = {}) {
  using std::exp;
  using std::log;
  switch (e.node) {
    case MeanExpr::Node::leaf:
      switch (e.leaf) {
        case MeanExpr::Leaf::arithmetic:
          return arithmetic_mean(a, b);
        case MeanExpr::Leaf::geometric:
          return geometric_mean(a, b);
        case MeanExpr::Leaf::quadratic:
          return quadratic_mean(a, b);
        case MeanExpr::Leaf::contraharmonic:
          return contraharmonic_mean(a, b);
        case MeanExpr::Leaf::seiffert_t:
          return seiffert_t(a, b);
        case MeanExpr::Leaf::seiffert_p:
          return seiffert_p(a, b);
        case MeanExpr::Leaf::neuman_sandor:
          return neuman_sandor(a, b);
        case MeanExpr::Leaf::logarithmic:
          return logarithmic_mean(a, b);
        case MeanExpr::Leaf::identric:
          return identric_mean(a, b);
        case MeanExpr::Leaf::power:
          return power_mean(e.order.value(params), a, b);
        case MeanExpr::Leaf::lehmer:
          return lehmer_mean(e.order.value(params), a, b);
        case MeanExpr::Leaf::q2_lehmer:
          return q2_over_lehmer(e.order.value(params), a, b);
      }
      throw std::logic_error("unreachable");
    case MeanExpr::Node::scale:
      return e.w1.value(params) * eval(e.kids[0], a, b, params);
    case MeanExpr::Node::affine:
      return e.w1.value(params) * eval(e.kids[0], a, b, params) +
             e.w2.value(params) * eval(e.kids[1], a, b, params);
    case MeanExpr::Node::mix: {
      const Real w = e.w1.value(params);
      return eval(e.kids[0], w * a + (1 - w) * b, w * b + (1 - w) * a, params);
    }
    case MeanExpr::Node::gpow: {
      const Real w = e.w1.value(params);
      const Real v1 = eval(e.kids[0], a, b, params);
      const Real v2 = eval(e.kids[1], a, b, params);
      return exp(w * log(v1) + (1 - w) * log(v2));
    }
  }
  throw std::logic_error("unreachable");
}

// ---- text form ----

namespace detail {

inline const char* leaf_token(MeanExpr::Leaf k) {
  switch (k) {
    case MeanExpr::Leaf::arithmetic:
      return "A";
    case MeanExpr::Leaf::geometric:
      return "G";
    case MeanExpr::Leaf::quadratic:
      return "Q";
    case MeanExpr::Leaf::contraharmonic:
      return "C";
    case MeanExpr::Leaf::seiffert_t:
      return "T";
    case MeanExpr::Leaf::seiffert_p:
      return "P";
    case MeanExpr::Leaf::neuman_sandor:
      return "N";
    case MeanExpr::Leaf::logarithmic:
      return "L";
    case MeanExpr::Leaf::identric:
      return "I";
    default:
      return nullptr;
  }
}

inline void print_term(const MeanExpr& e, std::string& out) {
  switch (e.node) {
    case MeanExpr::Node::leaf:
      switch (e.leaf) {
        case MeanExpr::Leaf::power:
          out += "A_" + e.order.str();
          return;
        case MeanExpr::Leaf::lehmer:
          out += "L_" + e.order.str();
          return;
        case MeanExpr::Leaf::q2_lehmer:
          out += "QL_" + e.order.str();
          return;
        default:
          out += leaf_token(e.leaf);
          return;
      }
    case MeanExpr::Node::scale:
      out += "scale " + e.w1.str() + " ";
      print_term(e.kids[0], out);
      return;
    case MeanExpr::Node::affine:
      out += "affine " + e.w1.str() + " ";
      print_term(e.kids[0], out);
      out += " " + e.w2.str() + " ";
      print_term(e.kids[1], out);
      return;
    case MeanExpr::Node::mix:
      out += "mix " + e.w1.str() + " ";
      print_term(e.kids[0], out);
      return;
    case MeanExpr::Node::gpow:
      out += "gpow " + e.w1.str() + " ";
      print_term(e.kids[0], out);
      out += " ";
      print_term(e.kids[1], out);
      return;
  }
}

inline bool valid_symbol_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline ExprNum parse_num_token(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty numeric token");
  if (tok[0] == '$') {
    const std::string name = tok.substr(1);
    if (!valid_symbol_name(name)) throw ParseError("bad symbol name: " + tok);
    return ExprNum::symbol(name);
  }
  if (tok.find('/') != std::string::npos) {
    const auto slash = tok.find('/');
    if (slash != tok.rfind('/')) throw ParseError("bad rational literal: " + tok);
    try {
      std::size_t u1 = 0, u2 = 0;
      const long long n = std::stoll(tok.substr(0, slash), &u1);
      const long long d = std::stoll(tok.substr(slash + 1), &u2);
      if (u1 != slash || u2 != tok.size() - slash - 1)
        throw ParseError("bad rational literal: " + tok);
      return ExprNum::rational(n, d);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad rational literal: " + tok);
    }
  }
  // decimal: validate by full-consume strtod, keep the text verbatim
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || !std::isfinite(v))
    throw ParseError("bad numeric literal: " + tok);
  // integers without '.' or exponent are rationals — keeps them exact and
  // canonical ("2" round-trips as 2/1, not as a decimal string)
  if (tok.find_first_of(".eE") == std::string::npos) {
    try {
      std::size_t used = 0;
      const long long n = std::stoll(tok, &used);
      if (used == tok.size()) return ExprNum::rational(n, 1);
    } catch (const std::exception&) {
    }
  }
  return ExprNum::decimal(tok);
}

struct TokenCursor {
  std::vector<std::string> toks;
  std::size_t pos = 0;
  const std::string& next(const char* what) {
    if (pos >= toks.size()) throw ParseError(std::string("expected ") + what + ", got end of input");
    return toks[pos++];
  }
  bool done() const { return pos == toks.size(); }
};

inline MeanExpr parse_term_at(TokenCursor& cur) {
  const std::string tok = cur.next("term");
  if (tok == "scale") {
    ExprNum c = parse_num_token(cur.next("coefficient"));
    return MeanExpr::scale(std::move(c), parse_term_at(cur));
  }
  if (tok == "affine") {
    ExprNum c1 = parse_num_token(cur.next("coefficient"));
    MeanExpr t1 = parse_term_at(cur);
    ExprNum c2 = parse_num_token(cur.next("coefficient"));
    MeanExpr t2 = parse_term_at(cur);
    return MeanExpr::affine(std::move(c1), std::move(t1), std::move(c2), std::move(t2));
  }
  if (tok == "mix") {
    ExprNum w = parse_num_token(cur.next("weight"));
    return MeanExpr::mix(std::move(w), parse_term_at(cur));
  }
  if (tok == "gpow") {
    ExprNum w = parse_num_token(cur.next("weight"));
    MeanExpr t1 = parse_term_at(cur);
    MeanExpr t2 = parse_term_at(cur);
    return MeanExpr::gpow(std::move(w), std::move(t1), std::move(t2));
  }
  if (tok == "A") return MeanExpr::named(MeanExpr::Leaf::arithmetic);
  if (tok == "G") return MeanExpr::named(MeanExpr::Leaf::geometric);
  if (tok == "Q") return MeanExpr::named(MeanExpr::Leaf::quadratic);
  if (tok == "C") return MeanExpr::named(MeanExpr::Leaf::contraharmonic);
  if (tok == "T") return MeanExpr::named(MeanExpr::Leaf::seiffert_t);
  if (tok == "P") return MeanExpr::named(MeanExpr::Leaf::seiffert_p);
  if (tok == "N") return MeanExpr::named(MeanExpr::Leaf::neuman_sandor);
  if (tok == "L") return MeanExpr::named(MeanExpr::Leaf::logarithmic);
  if (tok == "I") return MeanExpr::named(MeanExpr::Leaf::identric);
  if (tok.rfind("A_", 0) == 0) return MeanExpr::power(parse_num_token(tok.substr(2)));
  if (tok.rfind("L_", 0) == 0) return MeanExpr::lehmer(parse_num_token(tok.substr(2)));
  if (tok.rfind("QL_", 0) == 0) return MeanExpr::q2_lehmer(parse_num_token(tok.substr(3)));
  throw ParseError("unknown term token: " + tok);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace detail

inline std::string to_text(const MeanExpr& e) {
  std::string out;
  detail::print_term(e, out);
  return out;
}

// Parse a single term, e.g. "T", "A_5/3", "affine 2/3 Q 1/3 A".
inline MeanExpr parse_term(const std::string& text) {
  detail::TokenCursor cur{detail::split_ws(text)};
  MeanExpr e = detail::parse_term_at(cur);
  if (!cur.done()) throw ParseError("trailing tokens after term: " + cur.toks[cur.pos]);
  return e;
}

// Parse a '<'-separated chain of terms, e.g. "A < T < Q".
inline std::vector<MeanExpr> parse_chain_terms(const std::string& text) {
  std::vector<MeanExpr> terms;
  std::size_t start = 0;
  while (true) {
    const std::size_t lt = text.find('<', start);
    const std::string part = text.substr(start, lt == std::string::npos ? lt : lt - start);
    terms.push_back(parse_term(part));
    if (lt == std::string::npos) break;
    start = lt + 1;
  }
  if (terms.size() < 2) throw ParseError("a chain needs at least two terms");
  return terms;
}

}  // namespace bimeans
