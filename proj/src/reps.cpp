#include "jordan/reps.hpp"

#include <map>

#include "jordan/error.hpp"
#include "jordan/jordan_plane.hpp"
#include "jordan/linalg.hpp"

namespace jordan {

namespace {

void require_square_pair(const QMatrix& x, const QMatrix& y) {
  if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
    throw SizeMismatch("X and Y must be square of equal size, got " + std::to_string(x.rows()) + "x" +
                       std::to_string(x.cols()) + " and " + std::to_string(y.rows()) + "x" +
                       std::to_string(y.cols()));
}

void require_full_block(const RepPair& rep) {
  if (rep.Y() != jordan_block(rep.n()))
    throw NotFullBlockJordanCoordinates("Y must equal the full Jordan block J_" + std::to_string(rep.n()));
}

}  // namespace

QMatrix relation_residual(const QMatrix& x, const QMatrix& y) {
  require_square_pair(x, y);
  return x * y - y * x - y * y;
}

RepPair RepPair::make(QMatrix x, QMatrix y, std::optional<Partition> partition) {
  if (!relation_residual(x, y).is_zero()) throw RelationViolated("XY - YX != Y^2");
  if (partition && partition->size() != x.rows())
    throw SizeMismatch("partition of " + std::to_string(partition->size()) + " for a rep of dimension " +
                       std::to_string(x.rows()));

  RepPair rep;
  const auto y_index = nilpotency_index(y);
  if (!y_index) throw InvariantViolated("Y is not nilpotent although XY - YX = Y^2");
  const UniPoly s = squarefree_part(char_poly(x));
  const auto s_index = nilpotency_index(s(x));
  if (!s_index) throw InvariantViolated("S(X) is not nilpotent");
  rep.y_index_ = *y_index;
  rep.s_index_ = *s_index;
  rep.x_ = std::move(x);
  rep.y_ = std::move(y);
  rep.partition_ = std::move(partition);
  return rep;
}

std::variant<RepPair, Violation> verify_rep(const QMatrix& x, const QMatrix& y) {
  QMatrix residual = relation_residual(x, y);
  if (!residual.is_zero()) return Violation{std::move(residual)};
  return RepPair::make(x, y);
}

QMatrix jordan_matrix(const Partition& p) {
  std::vector<QMatrix> blocks;
  for (auto part : p.parts()) blocks.push_back(jordan_block(part));
  return QMatrix::block_diagonal(blocks);
}

QMatrix x_zero(std::size_t n) {
  if (n == 0) throw OutOfRange("x_zero needs n >= 1");
  QMatrix x(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) x(i, i + 1) = -Rational(static_cast<long>(i));
  return x;
}

QMatrix x_zero(const Partition& p) {
  std::vector<QMatrix> blocks;
  for (auto part : p.parts()) blocks.push_back(x_zero(part));
  return QMatrix::block_diagonal(blocks);
}

Fiber fiber_basis(const Partition& p) {
  const std::size_t n = p.size();
  const QMatrix y = jordan_matrix(p);
  // Column (r, c) of the operator is vec(E_rc Y - Y E_rc).
  QMatrix op(n * n, n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      QMatrix e(n, n);
      e(r, c) = 1;
      const QMatrix image = e * y - y * e;
      const auto& v = image.vec();
      for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero()) op(k, r * n + c) = v[k];
    }
  }
  Fiber fiber;
  fiber.particular = x_zero(p);
  if (!relation_residual(fiber.particular, y).is_zero())
    throw InvariantViolated("block x_zero does not solve the fiber equation");
  for (auto& v : nullspace_basis(op)) fiber.basis.emplace_back(n, n, std::move(v));
  return fiber;
}

bool is_b_toeplitz(const QMatrix& m, const Partition& p) {
  if (!m.is_square() || m.rows() != p.size()) return false;
  const auto& parts = p.parts();
  std::size_t r0 = 0;
  for (std::size_t bi = 0; bi < parts.size(); ++bi) {
    std::size_t c0 = 0;
    for (std::size_t bj = 0; bj < parts.size(); ++bj) {
      const long ni = static_cast<long>(parts[bi]);
      const long nj = static_cast<long>(parts[bj]);
      const long min_offset = std::max(0L, nj - ni);
      std::map<long, Rational> diagonal_value;
      for (long r = 0; r < ni; ++r) {
        for (long c = 0; c < nj; ++c) {
          const Rational& v = m(r0 + static_cast<std::size_t>(r), c0 + static_cast<std::size_t>(c));
          const long offset = c - r;
          if (offset < min_offset) {
            if (!v.is_zero()) return false;
            continue;
          }
          auto [it, inserted] = diagonal_value.emplace(offset, v);
          if (!inserted && it->second != v) return false;
        }
      }
      c0 += parts[bj];
    }
    r0 += parts[bi];
  }
  return true;
}

RepPair epsilon_rep(std::size_t n) {
  return RepPair::make(x_zero(n), jordan_block(n), Partition({n}));
}

QMatrix eval(const NcPoly& f, const RepPair& rep) {
  const std::size_t n = rep.n();
  std::map<std::pair<char, std::size_t>, QMatrix> powers;
  auto power = [&](char letter, std::size_t e) -> const QMatrix& {
    auto key = std::make_pair(letter, e);
    auto it = powers.find(key);
    if (it == powers.end()) {
      const QMatrix& base = letter == 'x' ? rep.X() : rep.Y();
      it = powers.emplace(key, matrix_power(base, static_cast<unsigned>(e))).first;
    }
    return it->second;
  };
  QMatrix out(n, n);
  for (const auto& [m, c] : f.terms()) {
    QMatrix term = QMatrix::identity(n);
    const std::string& w = m.word();
    std::size_t i = 0;
    while (i < w.size()) {
      if (w[i] != 'x' && w[i] != 'y') throw OutOfRange(std::string("unknown letter '") + w[i] + "'");
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      term = term * power(w[i], j - i);
      i = j;
    }
    out += term * c;
  }
  return out;
}

QMatrix eval(const NormalPoly& f, const RepPair& rep) { return eval(f.embed(), rep); }

RepPair canonical_pair(const Rational& lambda, const Rational& mu, std::size_t n) {
  const QMatrix j = jordan_block(n);
  return RepPair::make(QMatrix::identity(n) * lambda + j * mu + x_zero(n), j, Partition({n}));
}

RepPair block_rep(const Partition& p, std::span<const Rational> diag_values) {
  if (diag_values.size() != p.length())
    throw SizeMismatch("need one diagonal value per part: " + std::to_string(p.length()) + " parts, " +
                       std::to_string(diag_values.size()) + " values");
  std::vector<QMatrix> blocks;
  for (std::size_t i = 0; i < p.length(); ++i) {
    const std::size_t part = p.parts()[i];
    blocks.push_back(x_zero(part) + QMatrix::identity(part) * diag_values[i]);
  }
  return RepPair::make(QMatrix::block_diagonal(blocks), jordan_matrix(p), p);
}

RepPair conjugate(const RepPair& rep, const QMatrix& c) {
  const QMatrix c_inv = inverse(c);
  return RepPair::make(c * rep.X() * c_inv, c * rep.Y() * c_inv);
}

CanonicalParams extract_params(const RepPair& rep) {
  require_full_block(rep);
  CanonicalParams params;
  params.lambda = rep.X()(0, 0);
  if (rep.n() >= 2) params.mu = rep.X()(0, 1);
  return params;
}

FullBlockForm full_block_canonicalize(const RepPair& rep) {
  require_full_block(rep);
  const std::size_t n = rep.n();
  const QMatrix shifted = rep.X() - x_zero(n);
  FullBlockForm form;
  form.lambda = shifted(0, 0);
  std::vector<Rational> coeffs(n);
  for (std::size_t k = 1; k < n; ++k) coeffs[k] = shifted(0, k);
  form.p = UniPoly(std::move(coeffs));
  const QMatrix rebuilt = QMatrix::identity(n) * form.lambda + form.p(jordan_block(n)) + x_zero(n);
  form.residue = rep.X() - rebuilt;
  return form;
}

std::vector<Rational> eigenvalues_distinct_blocks(const RepPair& rep, const Partition& p,
                                                  std::span<const Rational> diag_values) {
  if (!p.has_distinct_parts())
    throw RepeatedBlockSizes("block sizes of " + p.str() + " are not pairwise distinct");
  if (p.size() != rep.n()) throw SizeMismatch("partition size differs from the rep dimension");
  if (diag_values.size() != p.length()) throw SizeMismatch("need one diagonal value per part");
  std::vector<Rational> out;
  UniPoly expected = UniPoly::constant(1);
  for (std::size_t j = 0; j < p.length(); ++j) {
    out.insert(out.end(), p.parts()[j], diag_values[j]);
    expected = expected * UniPoly::linear_power(diag_values[j], p.parts()[j]);
  }
  if (char_poly(rep.X()) != expected)
    throw SpectrumMismatch("characteristic polynomial of X is not prod (t - lambda_j)^n_j");
  return out;
}

FaithfulResult faithful_witness(const NcPoly& f, std::size_t max_n) {
  const NormalPoly nf = normal_form(f);
  if (nf.is_zero()) return {FaithfulResult::Status::InIdeal, 0};
  for (std::size_t n = 1; n <= max_n; ++n) {
    if (!eval(nf, epsilon_rep(n)).is_zero()) return {FaithfulResult::Status::Witness, n};
  }
  return {FaithfulResult::Status::NotFoundBelowMax, 0};
}

}  // namespace jordan
