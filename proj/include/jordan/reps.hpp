#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "jordan/ncpoly.hpp"
#include "jordan/partition.hpp"
#include "jordan/qmatrix.hpp"
#include "jordan/unipoly.hpp"

namespace jordan {

/// A pair of n x n matrices with XY - YX = Y^2.
///
/// make() verifies the relation exactly and then checks two consequences of
/// it: Y is nilpotent, and S(X) is nilpotent where S is the product of
/// (t - lambda) over the distinct eigenvalues of X (the square-free part of
/// the characteristic polynomial). A failure of either check is reported as
/// InvariantViolated; it would mean the arithmetic is wrong.
class RepPair {
 public:
  /// Throws SizeMismatch, RelationViolated or InvariantViolated.
  static RepPair make(QMatrix x, QMatrix y, std::optional<Partition> partition = std::nullopt);

  std::size_t n() const { return x_.rows(); }
  const QMatrix& X() const { return x_; }
  const QMatrix& Y() const { return y_; }
  /// Jordan type of Y, when Y is known to be in Jordan form.
  const std::optional<Partition>& partition() const { return partition_; }
  std::size_t y_nilpotency_index() const { return y_index_; }
  std::size_t s_nilpotency_index() const { return s_index_; }

  friend bool operator==(const RepPair& a, const RepPair& b) { return a.x_ == b.x_ && a.y_ == b.y_; }

 private:
  RepPair() = default;
  QMatrix x_, y_;
  std::optional<Partition> partition_;
  std::size_t y_index_ = 0;
  std::size_t s_index_ = 0;
};

/// XY - YX - Y^2. Throws SizeMismatch.
QMatrix relation_residual(const QMatrix& x, const QMatrix& y);

struct Violation {
  QMatrix residual;
};

/// RepPair when the relation holds, otherwise the residual. Throws SizeMismatch.
std::variant<RepPair, Violation> verify_rep(const QMatrix& x, const QMatrix& y);

/// Block diagonal nilpotent Jordan matrix with blocks in the order of p.
QMatrix jordan_matrix(const Partition& p);

/// The particular solution of X J_n - J_n X = J_n^2 with first superdiagonal
/// (0, -1, -2, ..., -(n-2)) and zeros elsewhere.
///
/// Sign convention: with Y upper triangular and XY - YX = Y^2 the superdiagonal
/// entries must satisfy c_i - c_{i+1} = 1, so they decrease. The increasing
/// sequence 0, 1, 2, ... solves YX - XY = Y^2 instead; the two conventions differ
/// by the automorphism y -> -y.
QMatrix x_zero(std::size_t n);

/// Block diagonal assembly of x_zero over the parts of p.
QMatrix x_zero(const Partition& p);

struct Fiber {
  QMatrix particular;           // block x_zero
  std::vector<QMatrix> basis;   // basis of the centralizer of jordan_matrix(p)
};

/// All X with X Y - Y X = Y^2 for Y = jordan_matrix(p): particular + span(basis).
/// The basis is the nullspace of the vectorized operator X -> XY - YX.
Fiber fiber_basis(const Partition& p);

/// Block upper triangular Toeplitz pattern of the centralizer of jordan_matrix(p):
/// block (i, j) is constant along diagonals and vanishes below offset
/// max(0, n_j - n_i).
bool is_b_toeplitz(const QMatrix& m, const Partition& p);

/// epsilon_n = (x_zero(n), J_n).
RepPair epsilon_rep(std::size_t n);

/// Substitutes X for x and Y for y.
QMatrix eval(const NcPoly& f, const RepPair& rep);
QMatrix eval(const NormalPoly& f, const RepPair& rep);

/// P_{lambda,mu}: X = lambda I + mu J_n + x_zero(n), Y = J_n.
RepPair canonical_pair(const Rational& lambda, const Rational& mu, std::size_t n);

/// X = blockdiag(x_zero(n_i) + lambda_i I), Y = jordan_matrix(p).
/// Throws SizeMismatch if diag_values does not have one value per part.
RepPair block_rep(const Partition& p, std::span<const Rational> diag_values);

/// (C X C^-1, C Y C^-1). Throws Singular.
RepPair conjugate(const RepPair& rep, const QMatrix& c);

struct CanonicalParams {
  Rational lambda;
  Rational mu;
  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;
};

/// lambda = X[0,0], mu = X[0,1]. Requires Y = J_n exactly.
CanonicalParams extract_params(const RepPair& rep);

struct FullBlockForm {
  Rational lambda;
  UniPoly p;         // p(0) = 0
  QMatrix residue;   // X - (lambda I + p(J_n) + x_zero(n)); zero on success
};

/// Writes X = lambda I + p(J_n) + x_zero(n). Requires Y = J_n exactly.
FullBlockForm full_block_canonicalize(const RepPair& rep);

/// Eigenvalues of X, lambda_j with multiplicity n_j, for a rep built with the
/// values diag_values on the diagonal blocks of pairwise distinct sizes.
/// Cross-checked against the characteristic polynomial (SpectrumMismatch).
/// Throws RepeatedBlockSizes when two parts coincide.
std::vector<Rational> eigenvalues_distinct_blocks(const RepPair& rep, const Partition& p,
                                                  std::span<const Rational> diag_values);

struct FaithfulResult {
  enum class Status { Witness, InIdeal, NotFoundBelowMax };
  Status status = Status::NotFoundBelowMax;
  std::size_t n = 0;   // the witness dimension when status == Witness
};

/// Least n <= max_n with epsilon_n(f) != 0, or InIdeal when f is zero in R.
FaithfulResult faithful_witness(const NcPoly& f, std::size_t max_n);

}  // namespace jordan
