#include "jordan/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "jordan/error.hpp"

namespace jordan {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::linear_power(const Rational& root, std::size_t multiplicity) {
  UniPoly out = constant(1);
  const UniPoly factor({-root, Rational(1)});
  for (std::size_t i = 0; i < multiplicity; ++i) out = out * factor;
  return out;
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  const Rational lead = leading();
  std::vector<Rational> c = coeffs_;
  for (auto& v : c) v /= lead;
  return UniPoly(std::move(c));
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  return UniPoly(std::move(d));
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

QMatrix UniPoly::operator()(const QMatrix& m) const {
  if (!m.is_square()) throw NonSquare("polynomial evaluated at a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix acc(n, n);
  const QMatrix id = QMatrix::identity(n);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + id * *it;
  return acc;
}

UniPoly UniPoly::scale_argument(const Rational& c) const {
  std::vector<Rational> out = coeffs_;
  Rational power(1);
  for (auto& v : out) {
    v *= power;
    power *= c;
  }
  return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return UniPoly(std::move(out));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& v : out) v *= s;
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size();
  if (rem.size() < dd) return {UniPoly(), *this};
  std::vector<Rational> quot(rem.size() - dd + 1);
  const Rational lead = divisor.leading();
  for (std::size_t k = rem.size(); k-- >= dd;) {
    const Rational q = rem[k] / lead;
    quot[k - dd + 1] = q;
    if (q.is_zero()) continue;
    for (std::size_t j = 0; j < dd; ++j) rem[k - dd + 1 + j] -= q * divisor.coeffs_[j];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UniPoly::constant(1);
  const UniPoly g = gcd(p, p.derivative());
  return p.divmod(g).first.monic();
}

namespace {

// Positive divisors of |value| by trial division. value != 0.
std::vector<Integer> divisors(Integer value) {
  value = abs(value);
  std::map<Integer, unsigned> factors;
  Integer d = 2;
  while (d * d <= value) {
    while (mpz_divisible_p(value.get_mpz_t(), d.get_mpz_t())) {
      ++factors[d];
      value /= d;
    }
    d += (d == 2) ? 1 : 2;
  }
  if (value > 1) ++factors[value];
  std::vector<Integer> out{Integer(1)};
  for (const auto& [prime, exp] : factors) {
    const std::size_t existing = out.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= exp; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Integer coefficients of a nonzero rational polynomial with the same roots.
std::vector<Integer> integer_coefficients(const UniPoly& p) {
  Integer lcm_den = 1;
  for (const auto& c : p.coefficients())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& c : p.coefficients()) {
    out.push_back(c.numerator() * (lcm_den / c.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0 && g != 1)
    for (auto& v : out) v /= g;
  return out;
}

}  // namespace

std::vector<RootMultiplicity> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw OutOfRange("rational roots of the zero polynomial");
  UniPoly s = squarefree_part(p);
  std::vector<Rational> roots;
  if (s.degree() >= 1 && s.coeff(0).is_zero()) {
    roots.push_back(Rational(0));
    s = s.divmod(UniPoly({Rational(0), Rational(1)})).first;
  }
  if (s.degree() >= 1) {
    const std::vector<Integer> ic = integer_coefficients(s);
    const std::vector<Integer> nums = divisors(ic.front());
    const std::vector<Integer> dens = divisors(ic.back());
    for (const auto& q : dens) {
      for (const auto& num : nums) {
        for (int sgn : {1, -1}) {
          Rational candidate(Integer(num * sgn), q);
          if (std::find(roots.begin(), roots.end(), candidate) != roots.end()) continue;
          if (s(candidate).is_zero()) roots.push_back(candidate);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<RootMultiplicity> out;
  for (const auto& r : roots) {
    const UniPoly factor({-r, Rational(1)});
    UniPoly rest = p;
    std::size_t mult = 0;
    for (;;) {
      auto [q, rem] = rest.divmod(factor);
      if (!rem.is_zero()) break;
      ++mult;
      rest = std::move(q);
    }
    out.push_back({r, mult});
  }
  return out;
}

std::optional<std::vector<RootMultiplicity>> rational_factorization(const UniPoly& p) {
  auto roots = rational_roots(p);
  std::size_t total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  if (static_cast<long>(total) != p.degree()) return std::nullopt;
  return roots;
}

}  // namespace jordan
