#include "cherednik/errors.hpp"
#include "cherednik/weyl.hpp"

#include <cctype>

namespace cherednik {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int vars) : s_(text), vars_(vars) {}

  WeylElement run() {
    WeylElement e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  WeylElement expr() {
    WeylElement acc = term();
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  WeylElement term() {
    WeylElement acc = unary();
    while (eat('*')) acc = weyl_mul(acc, unary());
    return acc;
  }

  WeylElement unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  WeylElement power() {
    WeylElement base = atom();
    if (eat('^')) {
      skip();
      std::string p = digits();
      if (p.empty()) fail("expected exponent");
      if (p.size() > 3) fail("exponent too large");
      return weyl_pow(base, static_cast<unsigned>(std::stoul(p)));
    }
    return base;
  }

  WeylElement atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      WeylElement e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (c == 'x' || c == 'd') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected variable index");
      const int i = s_[pos_++] - '0';
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("variable index above 9");
      if (i >= vars_) fail("variable index " + std::to_string(i) + " out of range");
      return c == 'x' ? WeylElement::x(vars_, i) : WeylElement::d(vars_, i);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = digits();
      std::string den = "1";
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator");
      }
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimals are not accepted");
      return WeylElement::constant(vars_, Rational::parse(num + "/" + den));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  int vars_;
  std::size_t pos_ = 0;
};

}  // namespace

WeylElement parse_weyl(std::string_view text, int vars) { return Parser(text, vars).run(); }

int weyl_vars_needed(std::string_view text) {
  int need = 1;
  for (std::size_t i = 0; i + 1 < text.size(); ++i) {
    if ((text[i] == 'x' || text[i] == 'd') && std::isdigit(static_cast<unsigned char>(text[i + 1])))
      need = std::max(need, text[i + 1] - '0' + 1);
  }
  return need;
}

}  // namespace cherednik
