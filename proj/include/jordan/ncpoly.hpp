#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "jordan/rational.hpp"

namespace jordan {

/// A word in the free monoid; letters are single characters. The empty word is 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::string word) : word_(std::move(word)) {}
  /// y^k x^m
  static Monomial normal(std::size_t k, std::size_t m) {
    return Monomial(std::string(k, 'y') + std::string(m, 'x'));
  }

  const std::string& word() const { return word_; }
  std::size_t degree() const { return word_.size(); }
  bool is_identity() const { return word_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b) { return Monomial(a.word_ + b.word_); }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  /// Run-length form, e.g. "x^2*y"; "1" for the empty word.
  std::string str() const;

 private:
  std::string word_;
};

/// Element of the free algebra Q<x, y>. No zero coefficients are stored.
class NcPoly {
 public:
  using Terms = std::map<Monomial, Rational>;

  NcPoly() = default;
  NcPoly(const Monomial& m, const Rational& c = Rational(1)) { add_term(m, c); }  // NOLINT
  static NcPoly constant(const Rational& c) { return NcPoly(Monomial(), c); }
  static NcPoly letter(char c) { return NcPoly(Monomial(std::string(1, c))); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Highest word length; -1 for zero.
  long degree() const;

  void add_term(const Monomial& m, const Rational& c);

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly& operator*=(const Rational& s);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  /// Terms in descending deglex order (x > y), in the polynomial text grammar.
  std::string str() const;

 private:
  Terms terms_;
};

/// Linear combination of the normal monomials y^k x^m, keyed by (k, m).
class NormalPoly {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using Terms = std::map<Key, Rational>;

  NormalPoly() = default;
  static NormalPoly monomial(std::size_t k, std::size_t m, const Rational& c = Rational(1));
  static NormalPoly constant(const Rational& c) { return monomial(0, 0, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long degree() const;
  Rational coeff(std::size_t k, std::size_t m) const;

  void add_term(std::size_t k, std::size_t m, const Rational& c);

  NormalPoly& operator+=(const NormalPoly& o);
  NormalPoly& operator-=(const NormalPoly& o);
  NormalPoly& operator*=(const Rational& s);
  friend NormalPoly operator+(NormalPoly a, const NormalPoly& b) { return a += b; }
  friend NormalPoly operator-(NormalPoly a, const NormalPoly& b) { return a -= b; }
  friend NormalPoly operator*(const Rational& s, NormalPoly a) { return a *= s; }
  friend bool operator==(const NormalPoly&, const NormalPoly&) = default;

  /// The same element viewed in the free algebra.
  NcPoly embed() const;
  std::string str() const;

 private:
  Terms terms_;
};

/// Degree-lexicographic comparison with x > y: true when a < b.
bool deglex_less(const Monomial& a, const Monomial& b);

}  // namespace jordan
