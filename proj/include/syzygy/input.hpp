#pragma once

// Line-oriented input files binding named polynomials:
//
//   # comment (runs to end of line)
//   ring QQ u0 u1 u2 u3 u4
//   let Q = u0*u2 - u1^2
//   let f = Q^2 + u3*u4^3
//   use paper-constants
//
// `ring <field> <var...> [graded]` declares the ring for subsequent `let`
// lines; fields are QQ, QQi, or GF(<prime>).  `graded` pairs consecutive
// variables as coordinates of projective-line factors.  `let <name> = <expr>`
// parses the expression in the declared ring; expressions may reference
// earlier bound names of the same ring.  `use paper-constants` imports the
// built-in catalog of named forms; when a declared ring is structurally
// identical to a catalog ring (same field, variables, grading), that subset
// is rebound into the declared ring so later expressions can mix them.

#include <syzygy/catalog.hpp>
#include <syzygy/parse.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syz {

struct InputError : std::runtime_error {
  int line;
  InputError(const std::string& msg, int at)
      : std::runtime_error("input line " + std::to_string(at) + ": " + msg), line(at) {}
};

struct InputFile {
  RingRef ring;  // last declared ring, may be null when only `use` appeared
  std::vector<std::string> order;  // binding names in file order
  std::map<std::string, Polynomial> bindings;

  const Polynomial& lookup(const std::string& name) const {
    auto it = bindings.find(name);
    if (it == bindings.end()) throw std::runtime_error("no binding named '" + name + "'");
    return it->second;
  }

  // Resolves a comma-separated name list, in the given order.
  std::vector<Polynomial> lookup_list(const std::string& csv) const {
    std::vector<Polynomial> out;
    std::string cur;
    auto flush = [&] {
      if (cur.empty()) throw std::runtime_error("empty name in list '" + csv + "'");
      out.push_back(lookup(cur));
      cur.clear();
    };
    for (char c : csv) {
      if (c == ',') flush();
      else if (!std::isspace(static_cast<unsigned char>(c))) cur += c;
    }
    flush();
    return out;
  }
};

namespace detail {

inline FieldRef field_gf_from_text(const std::string& num, int line) {
  try {
    unsigned long p = std::stoul(num);
    return field_GF(static_cast<std::uint32_t>(p));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad finite-field modulus '") + num + "': " + e.what(), line);
  }
}

// Simple extension QQ[t]/(m(t)): the modulus is parsed in a throwaway
// univariate ring and handed over as its coefficient vector.
inline FieldRef field_extension_from_text(const std::string& body, int line) {
  try {
    RingRef tring = make_ring(field_QQ(), {"t"});
    Polynomial m = parse_polynomial(tring, body);
    std::vector<Rat> coeffs(static_cast<std::size_t>(m.degree()) + 1, Rat(0));
    for (const auto& [mono, c] : m.terms())
      coeffs[static_cast<std::size_t>(mono[0])] = c.rat();
    return field_extension(std::move(coeffs));
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(std::string("bad extension modulus '") + body + "': " + e.what(), line);
  }
}

// Recognizes a one-token field name: QQ, QQi, QQ(i), GF(p), QQ[t]/(m(t)).
// Returns null when the token is not a field name (the caller decides whether
// that is an error).
inline FieldRef field_from_token(const std::string& tok, int line) {
  if (tok == "QQ") return field_QQ();
  if (tok == "QQi" || tok == "QQ(i)") return field_QQi();
  if (tok.size() > 4 && tok.rfind("GF(", 0) == 0 && tok.back() == ')')
    return field_gf_from_text(tok.substr(3, tok.size() - 4), line);
  if (tok.rfind("QQ[t]/", 0) == 0) {
    std::string body = tok.substr(6);
    if (body.size() < 3 || body.front() != '(' || body.back() != ')')
      throw InputError("extension modulus must be parenthesized: QQ[t]/(...)", line);
    return field_extension_from_text(body.substr(1, body.size() - 2), line);
  }
  return nullptr;
}

// The `field` directive: everything after the keyword, e.g. `field QQ`,
// `field QQi`, `field GF 10007`, `field QQ[t]/(11*t^4-68*t^2+108)`.
inline FieldRef field_from_directive(std::istringstream& ls, int line) {
  std::vector<std::string> toks;
  std::string t;
  while (ls >> t) toks.push_back(t);
  if (toks.empty()) throw InputError("field: missing field name", line);
  if (toks[0] == "GF" && toks.size() == 2) return field_gf_from_text(toks[1], line);
  std::string joined;
  for (const auto& s : toks) joined += s;  // allow spaces inside a modulus
  FieldRef f = field_from_token(joined, line);
  if (!f) throw InputError("unknown field '" + joined +
                               "' (expected QQ, QQi, GF p, or QQ[t]/(m(t)))",
                           line);
  return f;
}

inline bool same_ring_shape(const Ring& a, const Ring& b) {
  return *a.field == *b.field && a.vars == b.vars && a.graded == b.graded;
}

// Rebinds a polynomial into a structurally identical ring by printing and
// re-parsing (the printer/parser pair is exact).
inline Polynomial rebind(const Polynomial& p, const RingRef& target) {
  return parse_polynomial(target, p.to_string());
}

inline void import_catalog(InputFile& file, int line) {
  const Catalog& C = catalog();
  std::vector<std::pair<std::string, Polynomial>> entries;
  entries.reserve(32);
  for (int j = 0; j < 6; ++j) entries.emplace_back("U" + std::to_string(j), C.U_q[static_cast<std::size_t>(j)]);
  entries.emplace_back("U5_text", C.U5_text_q);
  entries.emplace_back("U5_appendix", C.U5_appendix_q);
  entries.emplace_back("F1", C.F1);
  entries.emplace_back("F2", C.F2);
  entries.emplace_back("H0", C.H0);
  entries.emplace_back("H1", C.H1);
  entries.emplace_back("H2", C.H2);
  entries.emplace_back("H3", C.H3);
  entries.emplace_back("H4", C.H4);
  entries.emplace_back("Q0", C.Q0);
  entries.emplace_back("Q1", C.Q1);
  entries.emplace_back("G0", C.G0);
  entries.emplace_back("G0_alt", C.G0_alt);
  entries.emplace_back("G1", C.G1);
  entries.emplace_back("F0", C.F0);
  entries.emplace_back("f", C.f);
  for (auto& [name, poly] : entries) {
    if (file.bindings.count(name))
      throw InputError("'" + name + "' already bound before `use paper-constants`", line);
    Polynomial bound = poly;
    if (file.ring && same_ring_shape(*poly.ring(), *file.ring) && poly.ring() != file.ring)
      bound = rebind(poly, file.ring);
    file.bindings.emplace(name, std::move(bound));
    file.order.push_back(name);
  }
}

}  // namespace detail

inline InputFile parse_input(const std::string& text) {
  InputFile file;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;  // blank or comment-only

    if (word == "field") {
      file.declared_field = detail::field_from_directive(ls, lineno);
      continue;
    }

    if (word == "ring") {
      std::string ftok;
      if (!(ls >> ftok)) throw InputError("ring: missing field", lineno);
      FieldRef field = detail::field_from_token(ftok, lineno);
      std::vector<std::string> vars;
      bool graded = false;
      if (!field) {
        // First token is not a field name: fall back to a `field` directive.
        if (!file.declared_field)
          throw InputError("ring: '" + ftok + "' is not a field and no `field` was declared",
                           lineno);
        field = file.declared_field;
        vars.push_back(ftok);
      }
      std::string v;
      while (ls >> v) {
        if (v == "graded") {
          graded = true;
          if (ls >> v) throw InputError("ring: 'graded' must be the last token", lineno);
          break;
        }
        vars.push_back(v);
      }
      if (vars.empty()) throw InputError("ring: no variables", lineno);
      if (graded && vars.size() % 2 != 0)
        throw InputError("ring: graded needs an even variable count", lineno);
      try {
        file.ring = make_ring(field, vars, graded);
      } catch (const std::exception& e) {
        throw InputError(std::string("ring: ") + e.what(), lineno);
      }
      continue;
    }

    if (word == "let") {
      if (!file.ring) throw InputError("let before any ring declaration", lineno);
      std::string name, eq;
      if (!(ls >> name >> eq) || eq != "=")
        throw InputError("expected `let <name> = <expr>`", lineno);
      if (file.ring->var_index(name) || name == "i" || name == "t")
        throw InputError("'" + name + "' shadows a ring symbol", lineno);
      if (file.bindings.count(name)) throw InputError("'" + name + "' is already bound", lineno);
      std::string expr;
      std::getline(ls, expr);
      try {
        Polynomial p = parse_polynomial(file.ring, expr, &file.bindings);
        file.bindings.emplace(name, std::move(p));
        file.order.push_back(name);
      } catch (const ParseError& e) {
        throw InputError(std::string("in expression for '") + name + "': " + e.what(), lineno);
      }
      continue;
    }

    if (word == "use") {
      std::string what;
      if (!(ls >> what) || what != "paper-constants")
        throw InputError("the only importable module is `use paper-constants`", lineno);
      detail::import_catalog(file, lineno);
      continue;
    }

    throw InputError("unknown directive '" + word + "'", lineno);
  }
  return file;
}

}  // namespace syz
