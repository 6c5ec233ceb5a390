#pragma once
// Recursive-descent parser for polynomial expressions over a given ring.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' nat)?
//   base   := nat ('/' nat)? | 'i' | 't' | ident | '(' expr ')'
//
// 'i' is the imaginary unit when the coefficient field is QQi, 't' the
// generator of an extension field; every other identifier must be a ring
// variable or a name from the optional binding table (same ring required).
// The printer in ring.hpp emits only strings this grammar accepts, so
// printing and re-parsing is the identity.

#include <syzygy/ring.hpp>

#include <cctype>
#include <map>
#include <string>

namespace syz {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " at position " + std::to_string(at)), pos(at) {}
};

namespace detail {

class PolyParser {
 public:
  PolyParser(RingRef ring, const std::string& text,
             const std::map<std::string, Polynomial>* bindings = nullptr)
      : ring_(std::move(ring)), s_(text), bindings_(bindings) {}

  Polynomial run() {
    Polynomial p = parse_expr();
    skip_ws();
    if (!at_end()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

  bool at_end() const { return i_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[i_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip_ws();
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Int parse_nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::size_t start = i_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++i_;
    return Int(s_.substr(start, i_ - start));
  }

  std::string parse_ident() {
    skip_ws();
    auto head = [](char c) {
      return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto tail = [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    };
    if (!head(peek())) fail("expected an identifier");
    std::size_t start = i_;
    ++i_;
    while (!at_end() && tail(s_[i_])) ++i_;
    return s_.substr(start, i_ - start);
  }

  Polynomial parse_expr() {
    skip_ws();
    bool neg = eat('-');
    Polynomial acc = parse_term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++i_;
        Polynomial t = parse_term();
        if (c == '+') acc += t;
        else acc -= t;
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial parse_term() {
    Polynomial acc = parse_factor();
    while (eat('*')) acc *= parse_factor();
    return acc;
  }

  Polynomial parse_factor() {
    Polynomial b = parse_base();
    if (eat('^')) {
      std::size_t at = i_;
      Int n = parse_nat();
      if (n > 1000000) throw ParseError("exponent too large", at);
      return b.pow(static_cast<int>(n.get_si()));
    }
    return b;
  }

  Polynomial parse_base() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = parse_nat();
      std::size_t save = i_;
      skip_ws();
      if (peek() == '/') {
        ++i_;
        std::size_t at = i_;
        Int den = parse_nat();
        if (den == 0) throw ParseError("zero denominator", at);
        Rat q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, FieldElement::from_rat(ring_->field, q));
      }
      i_ = save;
      return Polynomial::constant(ring_, FieldElement::from_rat(ring_->field, Rat(num)));
    }
    if (c == '(') {
      ++i_;
      Polynomial e = parse_expr();
      skip_ws();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    std::size_t at = i_;
    std::string name = parse_ident();
    if (name == "i" && ring_->field->kind == FieldKind::Gaussian)
      return Polynomial::constant(ring_, FieldElement::imaginary_unit(ring_->field));
    if (name == "t" && ring_->field->kind == FieldKind::Extension)
      return Polynomial::constant(ring_, FieldElement::generator(ring_->field));
    if (auto v = ring_->var_index(name)) return Polynomial::variable(ring_, *v);
    if (bindings_) {
      auto it = bindings_->find(name);
      if (it != bindings_->end()) {
        if (it->second.ring() != ring_)
          throw ParseError("name '" + name + "' is bound in a different ring", at);
        return it->second;
      }
    }
    throw ParseError("unknown identifier '" + name + "'", at);
  }

  RingRef ring_;
  const std::string& s_;
  std::size_t i_ = 0;
  const std::map<std::string, Polynomial>* bindings_ = nullptr;
};

}  // namespace detail

inline Polynomial parse_polynomial(const RingRef& ring, const std::string& text,
                                   const std::map<std::string, Polynomial>* bindings = nullptr) {
  return detail::PolyParser(ring, text, bindings).run();
}

}  // namespace syz
