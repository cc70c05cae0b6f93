#include "jordan/strata.hpp"

#include <atomic>
#include <optional>
#include <thread>

#include "jordan/error.hpp"
#include "jordan/imagealg.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

std::string to_string(TameLabel label) {
  switch (label) {
    case TameLabel::Tame: return "tame";
    case TameLabel::Wild: return "wild";
    case TameLabel::Unknown: return "unknown";
  }
  return "unknown";
}

TameLabel tame_label(const Partition& p) {
  if (p.length() != 1) return TameLabel::Unknown;
  return p.size() <= 4 ? TameLabel::Tame : TameLabel::Wild;
}

namespace {

StratumInfo stratum_row(const Partition& p) {
  const std::size_t n = p.size();
  StratumInfo row{p};
  row.fiber_dim = fiber_basis(p).basis.size();
  row.base_dim = n * n - row.fiber_dim;
  row.stratum_dim = row.fiber_dim + row.base_dim;
  row.image_dim_bound = dim_bound(n);
  row.tame_label = tame_label(p);
  return row;
}

}  // namespace

std::vector<StratumInfo> census(std::size_t n, unsigned threads) {
  const auto parts = partitions(n);
  std::vector<std::optional<StratumInfo>> rows(parts.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < parts.size(); ++i) rows[i] = stratum_row(parts[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < parts.size(); i = next++) rows[i] = stratum_row(parts[i]);
      });
    }
  }
  std::vector<StratumInfo> out;
  out.reserve(rows.size());
  for (auto& r : rows) out.push_back(std::move(*r));
  return out;
}

Decomposition decompose(const RepPair& rep) {
  auto split = spectral_splitting(rep.X());
  if (!split) throw IrrationalEigenvalues("the characteristic polynomial of X does not split over Q");
  const QMatrix& p = split->change_of_basis;
  const QMatrix& p_inv = split->change_of_basis_inverse;
  const QMatrix x = p_inv * rep.X() * p;
  const QMatrix y = p_inv * rep.Y() * p;

  Decomposition out;
  out.change_of_basis = p;
  std::size_t offset = 0;
  for (const auto& space : split->spaces) {
    const std::size_t m = space.multiplicity;
    out.summands.push_back(RepPair::make(x.submatrix(offset, offset, m, m), y.submatrix(offset, offset, m, m)));
    out.eigenvalues.push_back(space.eigenvalue);
    offset += m;
  }
  // Y-invariance of the eigenspaces means the off-diagonal blocks vanish.
  std::vector<QMatrix> xs, ys;
  for (const auto& s : out.summands) {
    xs.push_back(s.X());
    ys.push_back(s.Y());
  }
  if (QMatrix::block_diagonal(xs) != x || QMatrix::block_diagonal(ys) != y)
    throw InvariantViolated("generalized eigenspaces of X are not Y-invariant");
  return out;
}

bool single_eigenvalue_test(const RepPair& rep) {
  const std::size_t n = rep.n();
  if (n == 0) return false;
  const UniPoly f = char_poly(rep.X());
  const Rational lambda = -f.coeff(n - 1) / Rational(static_cast<long>(n));
  return f == UniPoly::linear_power(lambda, n);
}

std::size_t jacobian_rank(std::size_t n, std::span<const Rational> c_coeffs, std::span<const Rational> x_coeffs) {
  if (n < 2) throw OutOfRange("jacobian_rank needs n >= 2");
  if (c_coeffs.size() > n - 1 || x_coeffs.size() > n - 1)
    throw OutOfRange("at most n-1 coefficients for C and X");
  const QMatrix j = jordan_block(n);
  std::vector<QMatrix> j_powers{QMatrix::identity(n)};
  for (std::size_t k = 1; k < n; ++k) j_powers.push_back(j_powers.back() * j);

  QMatrix c = QMatrix::identity(n);
  for (std::size_t k = 0; k < c_coeffs.size(); ++k) c += j_powers[k + 1] * c_coeffs[k];
  QMatrix x = x_zero(n);
  for (std::size_t k = 0; k < x_coeffs.size(); ++k) x += j_powers[k + 1] * x_coeffs[k];

  const QMatrix c_inv = inverse(c);
  const QMatrix c_inv_x = c_inv * x;
  const QMatrix c_inv_x_c = c_inv_x * c;
  QMatrix differential(n - 1, n * n);
  for (std::size_t k = 1; k < n; ++k) {
    const QMatrix& delta = j_powers[k];
    const QMatrix image = c_inv_x * delta - c_inv * delta * c_inv_x_c;
    for (std::size_t i = 0; i < n * n; ++i) differential(k - 1, i) = image.vec()[i];
  }
  return rank(differential);
}

}  // namespace jordan
