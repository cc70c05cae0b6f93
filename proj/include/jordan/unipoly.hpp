#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jordan/qmatrix.hpp"
#include "jordan/rational.hpp"

namespace jordan {

/// Univariate polynomial over Q, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading one is nonzero.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// (t - root)^multiplicity
  static UniPoly linear_power(const Rational& root, std::size_t multiplicity);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(); }
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  UniPoly monic() const;
  UniPoly derivative() const;
  Rational operator()(const Rational& t) const;
  QMatrix operator()(const QMatrix& m) const;
  /// p(c*t)
  UniPoly scale_argument(const Rational& c) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& p);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  /// Polynomial long division; throws DivisionByZero for a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  /// Text in variable `var`, highest degree first, e.g. "t^2 - 8*t + 15".
  std::string str(char var = 't') const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

UniPoly gcd(UniPoly a, UniPoly b);
/// p / gcd(p, p'), made monic: the product of (t - r) over the distinct roots.
UniPoly squarefree_part(const UniPoly& p);

struct RootMultiplicity {
  Rational root;
  std::size_t multiplicity = 0;
  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

/// All rational roots with multiplicities, sorted ascending.
std::vector<RootMultiplicity> rational_roots(const UniPoly& p);

/// Roots of p if p splits completely over Q (sum of multiplicities = degree).
std::optional<std::vector<RootMultiplicity>> rational_factorization(const UniPoly& p);

}  // namespace jordan
