#ifndef FOLRES_PARSE_HPP
#define FOLRES_PARSE_HPP

#include <cctype>
#include <string>

#include "folres/poly.hpp"

namespace folres {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Recursive-descent parser for the polynomial grammar: integer
/// coefficients, declared variables, operators + - * ^ and parentheses.
/// Coefficients are reduced mod p at parse time.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := nat | var | '(' expr ')' | '-' factor
class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string text) : ring_(std::move(ring)), text_(std::move(text)) {}

  Poly parse() {
    Poly r = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return r;
  }

 private:
  Poly expr() {
    Poly r = term();
    for (;;) {
      skip_ws();
      if (accept('+')) r += term();
      else if (accept('-')) r -= term();
      else return r;
    }
  }

  Poly term() {
    Poly r = factor();
    for (;;) {
      skip_ws();
      if (accept('*')) r *= factor();
      else return r;
    }
  }

  Poly factor() {
    Poly b = base();
    skip_ws();
    if (accept('^')) {
      skip_ws();
      return b.pow(natural());
    }
    return b;
  }

  Poly base() {
    skip_ws();
    if (accept('(')) {
      Poly r = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return r;
    }
    if (accept('-')) return -factor();
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      return Poly::constant(ring_, static_cast<std::int64_t>(natural()));
    if (pos_ < text_.size() &&
        (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
              text_[pos_] == '\''))
        name += text_[pos_++];
      std::size_t i = ring_->var_index(name);
      if (i == Ring::npos) fail("unknown variable '" + name + "'");
      return Poly::variable(ring_, i);
    }
    fail("expected coefficient, variable or '('");
    return Poly::zero(ring_);  // unreachable
  }

  unsigned natural() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a number");
    unsigned long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (v > 1000000000UL) fail("number too large");
    }
    return static_cast<unsigned>(v);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("polynomial parse error at position " + std::to_string(pos_) + ": " + msg +
                     " in \"" + text_ + "\"");
  }

  RingPtr ring_;
  std::string text_;
  std::size_t pos_ = 0;
};

inline Poly parse_poly(const RingPtr& ring, const std::string& text) {
  return PolyParser(ring, text).parse();
}

}  // namespace folres

#endif
