#include "jordan/automorphism.hpp"

#include "jordan/error.hpp"
#include "jordan/jordan_plane.hpp"

namespace jordan {

JordanAutomorphism::JordanAutomorphism(Rational alpha, UniPoly p) : alpha_(std::move(alpha)), p_(std::move(p)) {
  if (alpha_.is_zero()) throw OutOfRange("automorphism scale alpha must be nonzero");
}

NormalPoly apply_automorphism(const JordanAutomorphism& phi, const NcPoly& f) {
  NormalPoly image_x = NormalPoly::monomial(0, 1, phi.alpha());
  const auto& shift = phi.shift().coefficients();
  for (std::size_t k = 0; k < shift.size(); ++k) image_x.add_term(k, 0, shift[k]);
  const NormalPoly image_y = NormalPoly::monomial(1, 0, phi.alpha());

  NormalPoly out;
  for (const auto& [m, c] : f.terms()) {
    NormalPoly term = NormalPoly::constant(c);
    for (char letter : m.word()) {
      if (letter == 'x') {
        term = multiply(term, image_x);
      } else if (letter == 'y') {
        term = multiply(term, image_y);
      } else {
        throw OutOfRange(std::string("unknown letter '") + letter + "'");
      }
    }
    out += term;
  }
  return out;
}

JordanAutomorphism compose_automorphisms(const JordanAutomorphism& a, const JordanAutomorphism& b) {
  UniPoly p = a.shift().is_zero() ? UniPoly() : b.alpha() * a.shift();
  p += b.shift().scale_argument(a.alpha());
  return JordanAutomorphism(a.alpha() * b.alpha(), std::move(p));
}

JordanAutomorphism inverse(const JordanAutomorphism& a) {
  const Rational inv = Rational(1) / a.alpha();
  // Solve inv*p(y) + q(alpha*y) = 0 for q.
  UniPoly q = (-inv) * a.shift().scale_argument(inv);
  return JordanAutomorphism(inv, std::move(q));
}

}  // namespace jordan
