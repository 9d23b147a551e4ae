#pragma once

// Plain-text, line-oriented chain files.
//
//   # comment lines and blank lines are ignored
//   chain <name>                  starts an entry; the name is the rest of
//                                 the line, trimmed
//   description <text>            optional free text
//   param <symbol> <value>        binds $symbol to an exact literal
//                                 (rational p/q or decimal); repeatable
//   domain <lo> <hi>              optional open ratio interval, 0<=lo<hi<=1
//   terms <t1> < <t2> < ...       the chain itself, prefix term syntax
//   end                           closes the entry
//
// Term syntax is the library's prefix form (see expr.hpp), e.g.
// "affine 2/3 Q 1/3 A < T < Q".  Values are kept as exact literals, so a
// file round-trips losslessly through write_chains/load_chains.

#include "bimeans/chains.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

namespace bimeans {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] inline void chain_file_error(std::size_t line_no, const std::string& what) {
  throw ParseError("chain file, line " + std::to_string(line_no) + ": " + what);
}

}  // namespace detail

inline std::vector<ChainSpec> load_chains(std::istream& in) {
  std::vector<ChainSpec> out;
  ChainSpec cur;
  bool open = false;
  bool have_terms = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = detail::trim(line);
    if (text.empty() || text[0] == '#') continue;

    std::istringstream fields(text);
    std::string key;
    fields >> key;
    std::string rest;
    std::getline(fields, rest);
    rest = detail::trim(rest);

    if (key == "chain") {
      if (open) detail::chain_file_error(line_no, "'chain' before previous entry was closed with 'end'");
      if (rest.empty()) detail::chain_file_error(line_no, "chain needs a name");
      cur = ChainSpec{};
      cur.name = rest;
      open = true;
      have_terms = false;
      continue;
    }
    if (!open) detail::chain_file_error(line_no, "'" + key + "' outside a chain entry");

    if (key == "description") {
      cur.description = rest;
    } else if (key == "param") {
      std::istringstream pv(rest);
      std::string sym, value;
      pv >> sym >> value;
      std::string excess;
      if (!(pv >> excess).fail())
        detail::chain_file_error(line_no, "param takes exactly a symbol and a value");
      if (!detail::valid_symbol_name(sym))
        detail::chain_file_error(line_no, "bad parameter symbol: " + sym);
      if (cur.params.count(sym)) detail::chain_file_error(line_no, "duplicate param: " + sym);
      ExprNum num;
      try {
        num = detail::parse_num_token(value);
      } catch (const ParseError& e) {
        detail::chain_file_error(line_no, e.what());
      }
      if (num.kind == ExprNum::Kind::symbol)
        detail::chain_file_error(line_no, "param values must be literals, not symbols");
      cur.params.emplace(sym, std::move(num));
    } else if (key == "domain") {
      std::istringstream dv(rest);
      double lo = 0, hi = 0;
      if (!(dv >> lo >> hi)) detail::chain_file_error(line_no, "domain needs two numbers");
      std::string excess;
      if (!(dv >> excess).fail()) detail::chain_file_error(line_no, "domain takes exactly two numbers");
      if (!(lo >= 0 && lo < hi && hi <= 1))
        detail::chain_file_error(line_no, "domain must satisfy 0 <= lo < hi <= 1");
      cur.domain_lo = lo;
      cur.domain_hi = hi;
    } else if (key == "terms") {
      if (have_terms) detail::chain_file_error(line_no, "duplicate terms line");
      if (rest.empty()) detail::chain_file_error(line_no, "terms line is empty");
      try {
        parse_chain_terms(rest);  // validate eagerly so errors carry a line number
      } catch (const ParseError& e) {
        detail::chain_file_error(line_no, e.what());
      }
      cur.terms = rest;
      have_terms = true;
    } else if (key == "end") {
      if (!rest.empty()) detail::chain_file_error(line_no, "'end' takes nothing else");
      if (!have_terms) detail::chain_file_error(line_no, "chain '" + cur.name + "' has no terms");
      out.push_back(std::move(cur));
      open = false;
    } else {
      detail::chain_file_error(line_no, "unknown keyword: " + key);
    }
  }
  if (open) detail::chain_file_error(line_no, "unterminated chain entry: " + cur.name);
  return out;
}

inline std::vector<ChainSpec> load_chain_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open chain file: " + path);
  return load_chains(in);
}

// Serializes specs in the file format above.  Registry references cannot be
// represented in a file (files carry exact literals only), so specs that use
// them are rejected; bind literals instead.
inline std::string write_chains(const std::vector<ChainSpec>& specs) {
  std::ostringstream out;
  bool first = true;
  for (const ChainSpec& spec : specs) {
    if (!spec.registry.empty())
      throw std::invalid_argument("chain '" + spec.name +
                                  "' references registry constants; files hold literals only");
    if (!first) out << "\n";
    first = false;
    out << "chain " << spec.name << "\n";
    if (!spec.description.empty()) out << "description " << spec.description << "\n";
    for (const auto& [sym, num] : spec.params) out << "param " << sym << " " << num.str() << "\n";
    if (spec.domain_lo != 0.0 || spec.domain_hi != 1.0) {
      std::ostringstream dom;
      dom.precision(17);
      dom << spec.domain_lo << " " << spec.domain_hi;
      out << "domain " << dom.str() << "\n";
    }
    out << "terms " << spec.terms << "\n";
    out << "end\n";
  }
  return out.str();
}

}  // namespace bimeans
