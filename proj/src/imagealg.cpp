#include "jordan/imagealg.hpp"

#include "jordan/error.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

namespace {

QMatrix as_matrix(const Vector& v, std::size_t n) { return QMatrix(n, n, v); }

SpectralSplitting split_or_throw(const ImageAlgebra& a) {
  auto split = spectral_splitting(a.rep.X());
  if (!split) throw IrrationalEigenvalues("the characteristic polynomial of X does not split over Q");
  return std::move(*split);
}

std::vector<QMatrix> span_basis(const SpanBuilder& span, std::size_t n) {
  std::vector<QMatrix> out;
  for (const auto& row : span.basis()) out.push_back(as_matrix(row, n));
  return out;
}

}  // namespace

ImageAlgebra image_algebra(const RepPair& rep) {
  const std::size_t n = rep.n();
  SpanBuilder span(n * n);
  std::vector<QMatrix> frontier{QMatrix::identity(n)};
  span.insert(frontier.front().vec());
  std::size_t rounds = 0;
  while (!frontier.empty()) {
    ++rounds;
    std::vector<QMatrix> next;
    for (const auto& w : frontier) {
      for (const QMatrix* g : {&rep.X(), &rep.Y()}) {
        QMatrix product = w * *g;
        if (span.insert(product.vec())) next.push_back(std::move(product));
      }
    }
    frontier = std::move(next);
  }
  ImageAlgebra a{rep, span_basis(span, n), span.dim(), rounds};
  return a;
}

std::size_t dim_bound(std::size_t n) {
  return n % 2 == 0 ? n * (n + 2) / 4 : (n + 1) * (n + 1) / 4;
}

std::vector<QMatrix> idempotents(const ImageAlgebra& a) { return split_or_throw(a).projectors; }

std::vector<QMatrix> radical_basis(const ImageAlgebra& a) {
  const auto projectors = idempotents(a);
  // trace(b_l e_i) for each basis element b_l and idempotent e_i
  QMatrix functionals(projectors.size(), a.basis.size());
  for (std::size_t i = 0; i < projectors.size(); ++i)
    for (std::size_t l = 0; l < a.basis.size(); ++l) functionals(i, l) = (a.basis[l] * projectors[i]).trace();
  const std::size_t n = a.rep.n();
  std::vector<QMatrix> out;
  for (const auto& coeffs : nullspace_basis(functionals)) {
    QMatrix element(n, n);
    for (std::size_t l = 0; l < coeffs.size(); ++l)
      if (!coeffs[l].is_zero()) element += a.basis[l] * coeffs[l];
    out.push_back(std::move(element));
  }
  return out;
}

QuiverData quiver(const ImageAlgebra& a) {
  const SpectralSplitting split = split_or_throw(a);
  const std::size_t n = a.rep.n();
  const auto radical = radical_basis(a);

  SpanBuilder square(n * n);
  for (const auto& u : radical)
    for (const auto& v : radical) square.insert((u * v).vec());
  const auto radical_sq = span_basis(square, n);

  QuiverData q;
  const std::size_t r = split.projectors.size();
  for (const auto& space : split.spaces) q.vertices.push_back(space.eigenvalue);
  q.arrows.assign(r, std::vector<std::size_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const QMatrix& ei = split.projectors[i];
      const QMatrix& ej = split.projectors[j];
      SpanBuilder first(n * n), second(n * n);
      for (const auto& u : radical) first.insert((ei * u * ej).vec());
      for (const auto& u : radical_sq) second.insert((ei * u * ej).vec());
      q.arrows[i][j] = first.dim() - second.dim();
    }
  }
  return q;
}

std::size_t ideal_codim(const ImageAlgebra& a, std::span<const NcPoly> gens) {
  const std::size_t n = a.rep.n();
  SpanBuilder ideal(n * n);
  std::vector<QMatrix> frontier;
  for (const auto& g : gens) {
    QMatrix image = eval(g, a.rep);
    if (ideal.insert(image.vec())) frontier.push_back(std::move(image));
  }
  const QMatrix& x = a.rep.X();
  const QMatrix& y = a.rep.Y();
  while (!frontier.empty()) {
    std::vector<QMatrix> next;
    for (const auto& f : frontier) {
      for (QMatrix product : {x * f, y * f, f * x, f * y}) {
        if (ideal.insert(product.vec())) next.push_back(std::move(product));
      }
    }
    frontier = std::move(next);
  }
  return a.dim - ideal.dim();
}

std::vector<NormalPoly> discover_relations(const RepPair& rep, std::size_t max_degree) {
  const std::size_t n = rep.n();
  std::vector<QMatrix> y_powers{QMatrix::identity(n)}, x_powers{QMatrix::identity(n)};
  for (std::size_t k = 1; k <= max_degree; ++k) {
    y_powers.push_back(y_powers.back() * rep.Y());
    x_powers.push_back(x_powers.back() * rep.X());
  }
  // ascending deglex: within degree d, y^d < y^(d-1) x < ... < x^d
  std::vector<NormalPoly::Key> monomials;
  for (std::size_t d = 0; d <= max_degree; ++d)
    for (std::size_t m = 0; m <= d; ++m) monomials.push_back({d - m, m});

  QMatrix evaluation(n * n, monomials.size());
  for (std::size_t col = 0; col < monomials.size(); ++col) {
    const auto [k, m] = monomials[col];
    const QMatrix image = y_powers[k] * x_powers[m];
    for (std::size_t i = 0; i < n * n; ++i) evaluation(i, col) = image.vec()[i];
  }
  std::vector<NormalPoly> relations;
  for (const auto& v : nullspace_basis(evaluation)) {
    NormalPoly f;
    for (std::size_t col = 0; col < v.size(); ++col) f.add_term(monomials[col].first, monomials[col].second, v[col]);
    relations.push_back(std::move(f));
  }
  return relations;
}

}  // namespace jordan
