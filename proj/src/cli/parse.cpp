#include "locrep/cli/parse.hpp"

#include <cctype>

#include "locrep/errors.hpp"

namespace locrep::cli {

namespace {

constexpr unsigned long kMaxExponent = 4096;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RatFunc parse() {
    RatFunc f = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return f;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc f = term();
    for (;;) {
      if (accept('+')) {
        f = f + term();
      } else if (accept('-')) {
        f = f - term();
      } else {
        return f;
      }
    }
  }

  RatFunc term() {
    RatFunc f = unary();
    for (;;) {
      if (accept('*')) {
        f = f * unary();
      } else {
        skip();
        const std::size_t at = pos_;
        if (!accept('/')) return f;
        RatFunc d = unary();
        if (d.num().is_zero()) throw ParseError("division by zero", at);
        f = f / d;
      }
    }
  }

  RatFunc unary() {
    if (accept('-')) return -unary();
    return power();
  }

  RatFunc power() {
    RatFunc base = primary();
    if (!accept('^')) return base;
    skip();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a nonnegative integer exponent");
    const std::size_t at = pos_;
    const Int e = integer();
    if (e > kMaxExponent) throw ParseError("exponent too large", at);
    return base.pow(static_cast<unsigned>(e.get_ui()));
  }

  Int integer() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return Int(std::string(s_.substr(start, pos_ - start)));
  }

  RatFunc primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return RatFunc(Poly::constant(Rat(integer())));
    if (c == 'X' || c == 'x') {
      ++pos_;
      return RatFunc::x();
    }
    if (c == '(') {
      ++pos_;
      RatFunc f = expr();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    fail(std::string("unexpected '") + c + "'");
  }
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text) { return Parser(text).parse(); }

Rat parse_rational(std::string_view text) {
  if (text == "inf") throw ParseError("infinity is not a rational number", 0);
  const RatFunc f = parse_ratfunc(text);
  if (!f.is_constant()) throw ParseError("expected a rational constant", 0);
  return f.num().is_zero() ? Rat(0) : f.num()[0];
}

std::string format_ratfunc(const RatFunc& f) { return f.to_string(); }

}  // namespace locrep::cli
