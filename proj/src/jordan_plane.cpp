#include "jordan/jordan_plane.hpp"

#include <map>

#include "jordan/error.hpp"

namespace jordan {

namespace {

const RewriteSystem& jordan_system() {
  static const RewriteSystem rs = RewriteSystem::jordan();
  return rs;
}

}  // namespace

NormalPoly as_normal(const NcPoly& f) {
  NormalPoly out;
  for (const auto& [m, c] : f.terms()) {
    const std::string& w = m.word();
    const std::size_t k = w.find_first_not_of('y');
    const std::size_t ys = (k == std::string::npos) ? w.size() : k;
    if (w.find_first_not_of('x', ys) != std::string::npos)
      throw InvariantViolated("word " + m.str() + " is not of the form y^k x^m");
    out.add_term(ys, w.size() - ys, c);
  }
  return out;
}

NormalPoly normal_form(const NcPoly& f) { return as_normal(jordan_system().reduce(f)); }

Rational alpha_coeff(std::size_t k, std::size_t n) {
  if (k < 1 || k > n + 1) {
    throw OutOfRange("alpha_coeff needs 1 <= k <= n+1, got k=" + std::to_string(k) +
                     " n=" + std::to_string(n));
  }
  return factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n - k + 1));
}

NormalPoly left_multiply_by_x(const NormalPoly& f) {
  NormalPoly out;
  for (const auto& [key, c] : f.terms()) {
    const auto [k, m] = key;
    out.add_term(k, m + 1, c);
    if (k > 0) out.add_term(k + 1, m, c * Rational(static_cast<long>(k)));
  }
  return out;
}

NormalPoly multiply(const NormalPoly& f, const NormalPoly& g) {
  NormalPoly out;
  // y^a x^b * g = y^a * (x^b * g); y^a on the left only shifts k.
  std::map<std::size_t, NormalPoly> x_powers_times_g;
  for (const auto& [key, c] : f.terms()) {
    const auto [a, b] = key;
    auto it = x_powers_times_g.find(b);
    if (it == x_powers_times_g.end()) {
      NormalPoly h = g;
      for (std::size_t i = 0; i < b; ++i) h = left_multiply_by_x(h);
      it = x_powers_times_g.emplace(b, std::move(h)).first;
    }
    for (const auto& [hk, hc] : it->second.terms()) out.add_term(hk.first + a, hk.second, c * hc);
  }
  return out;
}

std::uint64_t hilbert_dim(std::size_t d) {
  const Integer count = count_normal_words(jordan_system(), d);
  if (!count.fits_ulong_p()) throw Overflow("hilbert_dim overflow");
  return count.get_ui();
}

std::vector<std::int64_t> gs_series_coefficients(std::int64_t gens, std::int64_t rels, std::size_t up_to) {
  std::vector<std::int64_t> a;
  a.reserve(up_to + 1);
  for (std::size_t k = 0; k <= up_to; ++k) {
    if (k == 0) {
      a.push_back(1);
      continue;
    }
    std::int64_t term = 0;
    if (__builtin_mul_overflow(gens, a[k - 1], &term)) throw Overflow("series coefficient overflow");
    if (k >= 2) {
      std::int64_t back = 0;
      if (__builtin_mul_overflow(rels, a[k - 2], &back) || __builtin_sub_overflow(term, back, &term))
        throw Overflow("series coefficient overflow");
    }
    a.push_back(term);
  }
  return a;
}

NcPoly jordan_relation() {
  return NcPoly(Monomial("xy")) - NcPoly(Monomial("yx")) - NcPoly(Monomial("yy"));
}

}  // namespace jordan
