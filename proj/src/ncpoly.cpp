#include "jordan/ncpoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace jordan {

namespace {

int letter_rank(char c) { return c == 'y' ? 0 : (c == 'x' ? 1 : 2 + static_cast<unsigned char>(c)); }

void append_term(std::ostringstream& os, bool first, const Rational& c, const std::string& body) {
  const Rational mag = c.sign() < 0 ? -c : c;
  if (first) {
    if (c.sign() < 0) os << '-';
  } else {
    os << (c.sign() < 0 ? " - " : " + ");
  }
  if (body.empty()) {
    os << mag;
  } else {
    if (!mag.is_one()) os << mag << '*';
    os << body;
  }
}

}  // namespace

bool deglex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& wa = a.word();
  const auto& wb = b.word();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    if (wa[i] != wb[i]) return letter_rank(wa[i]) < letter_rank(wb[i]);
  }
  return false;
}

std::string Monomial::str() const {
  if (word_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < word_.size()) {
    std::size_t j = i;
    while (j < word_.size() && word_[j] == word_[i]) ++j;
    if (!out.empty()) out += '*';
    out += word_[i];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

long NcPoly::degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m.degree()));
  return d;
}

void NcPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NcPoly& NcPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

std::string NcPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return deglex_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    append_term(os, first, c, m.is_identity() ? std::string() : m.str());
    first = false;
  }
  return os.str();
}

NormalPoly NormalPoly::monomial(std::size_t k, std::size_t m, const Rational& c) {
  NormalPoly p;
  p.add_term(k, m, c);
  return p;
}

long NormalPoly::degree() const {
  long d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, static_cast<long>(key.first + key.second));
  return d;
}

Rational NormalPoly::coeff(std::size_t k, std::size_t m) const {
  auto it = terms_.find({k, m});
  return it == terms_.end() ? Rational() : it->second;
}

void NormalPoly::add_term(std::size_t k, std::size_t m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{k, m}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

NormalPoly& NormalPoly::operator+=(const NormalPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

NormalPoly& NormalPoly::operator-=(const NormalPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

NormalPoly& NormalPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, c] : terms_) c *= s;
  return *this;
}

NcPoly NormalPoly::embed() const {
  NcPoly out;
  for (const auto& [key, c] : terms_) out.add_term(Monomial::normal(key.first, key.second), c);
  return out;
}

std::string NormalPoly::str() const { return embed().str(); }

}  // namespace jordan
