#include "jordan/rational.hpp"

#include <cctype>
#include <ostream>

#include "jordan/error.hpp"

namespace jordan {

namespace {

bool valid_integer_text(std::string_view s, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer to_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(const Integer& num, const Integer& den) : value_(num, den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer_text(s, true)) throw ParseError("not a rational: '" + std::string(text) + "'");
    return Rational(to_integer(s));
  }
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = trim(s.substr(slash + 1));
  if (!valid_integer_text(num, true) || !valid_integer_text(den, false)) {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  return Rational(to_integer(num), to_integer(den));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow(const Rational& base, unsigned exponent) {
  mpq_class out(1);
  mpz_pow_ui(out.get_num_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(out);
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

}  // namespace jordan
