#include "jordan/linalg.hpp"

#include <algorithm>

#include "jordan/error.hpp"

namespace jordan {

std::size_t rank(const QMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row; rank is unchanged.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer den = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), m(i, j).denominator().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j)
      a[i][j] = m(i, j).numerator() * (den / m(i, j).denominator());
  }

  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

EchelonForm rref(const QMatrix& m) {
  QMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

std::vector<Vector> nullspace_basis(const QMatrix& m) {
  const EchelonForm e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

using IntGrid = std::vector<std::vector<Integer>>;

// Integer matrix L*m with L the lcm of all denominators.
IntGrid scaled_to_integers(const QMatrix& m, Integer& scale) {
  scale = 1;
  for (const auto& e : m.entries()) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.denominator().get_mpz_t());
  IntGrid a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).numerator() * (scale / m(i, j).denominator());
  return a;
}

IntGrid multiply(const IntGrid& a, const IntGrid& b) {
  const std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
  IntGrid out(n, std::vector<Integer>(c));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (std::size_t j = 0; j < c; ++j) mpz_addmul(out[i][j].get_mpz_t(), a[i][l].get_mpz_t(), b[l][j].get_mpz_t());
    }
  return out;
}

bool is_zero(const IntGrid& a) {
  for (const auto& row : a)
    for (const auto& e : row)
      if (sgn(e) != 0) return false;
  return true;
}

}  // namespace

UniPoly char_poly(const QMatrix& m) {
  if (!m.is_square()) throw NonSquare("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  // Faddeev-LeVerrier on the integer matrix a = L*m, where every division by k
  // is exact. Then det(tI - m) = L^-n det(L t I - a).
  Integer scale;
  const IntGrid a = scaled_to_integers(m, scale);
  std::vector<Integer> c(n + 1);
  c[n] = 1;
  IntGrid mk(n, std::vector<Integer>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    mk = multiply(a, mk);
    for (std::size_t i = 0; i < n; ++i) mk[i][i] += c[n - k + 1];
    Integer trace = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) mpz_addmul(trace.get_mpz_t(), a[i][l].get_mpz_t(), mk[l][i].get_mpz_t());
    mpz_divexact_ui(trace.get_mpz_t(), trace.get_mpz_t(), k);
    c[n - k] = -trace;
  }
  std::vector<Rational> coeffs(n + 1);
  Integer power = 1;
  for (std::size_t k = n + 1; k-- > 0;) {
    coeffs[k] = Rational(c[k], power);
    power *= scale;
  }
  return UniPoly(std::move(coeffs));
}

std::optional<std::size_t> nilpotency_index(const QMatrix& m) {
  if (!m.is_square()) throw NonSquare("nilpotency index of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 0;
  Integer scale;
  const IntGrid a = scaled_to_integers(m, scale);
  IntGrid power = a;
  for (std::size_t p = 1; p <= n; ++p) {
    if (is_zero(power)) return p;
    power = multiply(power, a);
  }
  return std::nullopt;
}

QMatrix inverse(const QMatrix& m) {
  if (!m.is_square()) throw NonSquare("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const EchelonForm e = rref(aug);
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw Singular("matrix is singular");
  return e.reduced.submatrix(0, n, n, n);
}

std::optional<Vector> solve(const QMatrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side length mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const EchelonForm e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x(a.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

std::optional<SpectralSplitting> spectral_splitting(const QMatrix& m) {
  if (!m.is_square()) throw NonSquare("spectral splitting of a non-square matrix");
  const std::size_t n = m.rows();
  SpectralSplitting out;
  if (n == 0) return out;
  const auto roots = rational_factorization(char_poly(m));
  if (!roots) return std::nullopt;
  std::vector<Vector> columns;
  for (const auto& [root, mult] : *roots) {
    const QMatrix shifted = m - QMatrix::identity(n) * root;
    GeneralizedEigenspace space{root, mult, nullspace_basis(matrix_power(shifted, static_cast<unsigned>(mult)))};
    if (space.basis.size() != mult) throw Singular("generalized eigenspace dimension differs from multiplicity");
    columns.insert(columns.end(), space.basis.begin(), space.basis.end());
    out.spaces.push_back(std::move(space));
  }
  out.change_of_basis = QMatrix::from_columns(columns, n);
  out.change_of_basis_inverse = inverse(out.change_of_basis);
  std::size_t offset = 0;
  for (const auto& space : out.spaces) {
    QMatrix selector(n, n);
    for (std::size_t k = 0; k < space.multiplicity; ++k) selector(offset + k, offset + k) = 1;
    out.projectors.push_back(out.change_of_basis * selector * out.change_of_basis_inverse);
    offset += space.multiplicity;
  }
  return out;
}

Vector SpanBuilder::reduce(Vector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f.is_zero()) continue;
    const Vector& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < dim_; ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool SpanBuilder::insert(const Vector& v) {
  if (v.size() != dim_) throw DimensionMismatch("span vector length mismatch");
  Vector w = reduce(v);
  auto lead = std::find_if(w.begin(), w.end(), [](const Rational& x) { return !x.is_zero(); });
  if (lead == w.end()) return false;
  const std::size_t p = static_cast<std::size_t>(lead - w.begin());
  const Rational inv = Rational(1) / w[p];
  for (std::size_t j = p; j < dim_; ++j) w[j] *= inv;
  // keep the basis fully reduced in the new pivot column
  for (auto& row : rows_) {
    const Rational f = row[p];
    if (f.is_zero()) continue;
    for (std::size_t j = p; j < dim_; ++j)
      if (!w[j].is_zero()) row[j] -= f * w[j];
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  const auto idx = pos - pivots_.begin();
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + idx, std::move(w));
  return true;
}

bool SpanBuilder::contains(const Vector& v) const {
  if (v.size() != dim_) throw DimensionMismatch("span vector length mismatch");
  const Vector w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x.is_zero(); });
}

std::optional<Vector> SpanBuilder::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) coords[r] = v[pivots_[r]];
  return coords;
}

}  // namespace jordan
