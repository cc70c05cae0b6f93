#pragma once

#include "jordan/ncpoly.hpp"
#include "jordan/rational.hpp"
#include "jordan/unipoly.hpp"

namespace jordan {

/// The automorphism x -> alpha*x + p(y), y -> alpha*y of the Jordan plane.
class JordanAutomorphism {
 public:
  JordanAutomorphism() = default;
  /// Throws OutOfRange when alpha is zero.
  JordanAutomorphism(Rational alpha, UniPoly p);

  static JordanAutomorphism identity() { return {}; }

  const Rational& alpha() const { return alpha_; }
  const UniPoly& shift() const { return p_; }

  friend bool operator==(const JordanAutomorphism&, const JordanAutomorphism&) = default;

 private:
  Rational alpha_{1};
  UniPoly p_;
};

/// Substitutes x -> alpha*x + p(y), y -> alpha*y and returns the normal form.
NormalPoly apply_automorphism(const JordanAutomorphism& phi, const NcPoly& f);

/// a∘b, i.e. apply(compose(a, b), f) = apply(a, apply(b, f)). In (p, c)
/// notation: (p1, c1)(p2, c2) = (c2*p1(y) + p2(c1*y), c1*c2).
JordanAutomorphism compose_automorphisms(const JordanAutomorphism& a, const JordanAutomorphism& b);

JordanAutomorphism inverse(const JordanAutomorphism& a);

}  // namespace jordan
