#include "jordan/poly_parse.hpp"

#include <cctype>
#include <string>

#include "jordan/error.hpp"

namespace jordan {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NcPoly polynomial() {
    NcPoly out;
    Rational sign(1);
    skip_ws();
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? Rational(-1) : Rational(1);
    out += sign * term();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      const char op = take();
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      out += (op == '-' ? Rational(-1) : Rational(1)) * term();
    }
    return out;
  }

 private:
  NcPoly term() {
    skip_ws();
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = rational();
      skip_ws();
      if (peek() != '*') return NcPoly::constant(coeff);
      take();
    }
    std::string word = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      take();
      word += factor();
    }
    return NcPoly(Monomial(std::move(word)), coeff);
  }

  std::string factor() {
    skip_ws();
    const char letter = peek();
    if (letter != 'x' && letter != 'y') fail("expected 'x' or 'y'");
    take();
    skip_ws();
    if (peek() != '^') return std::string(1, letter);
    take();
    skip_ws();
    const std::string digits = digit_run();
    if (digits.empty()) fail("expected exponent");
    const unsigned long e = std::stoul(digits);
    if (e == 0) fail("exponent must be positive");
    if (e > 100000) fail("exponent too large");
    return std::string(e, letter);
  }

  Rational rational() {
    std::string s = digit_run();
    skip_ws();
    if (peek() == '/') {
      take();
      skip_ws();
      const std::string den = digit_run();
      if (den.empty()) fail("expected denominator");
      s += "/" + den;
    }
    try {
      return Rational::parse(s);
    } catch (const Error&) {
      fail("bad rational '" + s + "'");
    }
  }

  std::string digit_run() {
    std::string s;
    while (std::isdigit(static_cast<unsigned char>(peek()))) s += take();
    return s;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char take() { return at_end() ? '\0' : text_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

NcPoly parse_ncpoly(std::string_view text) { return Parser(text).polynomial(); }

}  // namespace jordan
