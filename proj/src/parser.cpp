#include "witt/parser.hpp"

#include <cctype>

namespace witt {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const VarsPtr& vars, MonomialOrder ord)
      : text_(text), vars_(vars), ord_(ord) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    skip_ws();
    bool neg = false;
    if (accept('-'))
      neg = true;
    else
      accept('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (accept('^')) {
      skip_ws();
      std::uint32_t e = parse_uint("exponent");
      base = base.pow(e);
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    fail(std::string("unexpected character '") + c + "'");
  }

  std::uint32_t parse_uint(const char* what) {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail(std::string("expected ") + what);
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xffffffffULL) fail(std::string(what) + " too large");
      ++pos_;
    }
    return static_cast<std::uint32_t>(v);
  }

  Polynomial rational_literal() {
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    std::string lit = digits;
    // '/' introduces a denominator; rationals are literals, there is no
    // general division operator, but whitespace stays insignificant
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t slash = pos_;
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        std::string den;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          den += text_[pos_++];
        if (rat_from_string(den) == 0) {
          pos_ = slash;
          fail("zero denominator");
        }
        lit = digits + "/" + den;
      } else {
        pos_ = slash;
        fail("expected digits after '/'");
      }
    } else {
      pos_ = save;
    }
    return Polynomial::constant(vars_, rat_from_string(lit), ord_);
  }

  Polynomial variable() {
    std::size_t start = pos_;
    std::string name;
    name += text_[pos_++];
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      name += text_[pos_++];
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if ((*vars_)[i] == name) return Polynomial::variable(vars_, i, ord_);
    pos_ = start;
    fail("unknown variable '" + name + "'");
  }

  const std::string& text_;
  const VarsPtr& vars_;
  MonomialOrder ord_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const VarsPtr& vars, MonomialOrder ord) {
  return Parser(text, vars, ord).run();
}

}  // namespace witt
