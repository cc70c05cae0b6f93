#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jordan/qmatrix.hpp"
#include "jordan/unipoly.hpp"

namespace jordan {

/// Rank over Q. Rows are scaled to integers and reduced by fraction-free
/// (Bareiss) elimination; the pivot is the first nonzero entry of the column.
std::size_t rank(const QMatrix& m);

struct EchelonForm {
  QMatrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan reduced row echelon form over Q.
EchelonForm rref(const QMatrix& m);

/// Basis of the right kernel. One vector per free column of the reduced echelon
/// form, with a 1 in that column, so the output is canonical.
std::vector<Vector> nullspace_basis(const QMatrix& m);

/// Monic det(tI - m) by Faddeev-LeVerrier. Throws NonSquare.
UniPoly char_poly(const QMatrix& m);

/// Least p with m^p = 0, or nullopt if m^n != 0. Throws NonSquare.
std::optional<std::size_t> nilpotency_index(const QMatrix& m);

/// Throws NonSquare or Singular.
QMatrix inverse(const QMatrix& m);

/// Some x with a x = b (free variables set to zero), or nullopt when inconsistent.
std::optional<Vector> solve(const QMatrix& a, const Vector& b);

struct GeneralizedEigenspace {
  Rational eigenvalue;
  std::size_t multiplicity = 0;
  std::vector<Vector> basis;   // canonical basis of ker (m - eigenvalue I)^multiplicity
};

/// Splitting of Q^n into generalized eigenspaces of m, eigenvalues ascending.
struct SpectralSplitting {
  std::vector<GeneralizedEigenspace> spaces;
  QMatrix change_of_basis;           // columns: the eigenspace bases in order
  QMatrix change_of_basis_inverse;
  std::vector<QMatrix> projectors;   // spectral projector onto each space along the others
};

/// nullopt when the characteristic polynomial does not split over Q.
/// Throws NonSquare.
std::optional<SpectralSplitting> spectral_splitting(const QMatrix& m);

/// Incrementally maintained reduced echelon basis of a subspace of Q^dim.
/// Used for span closures where vectors arrive one at a time.
class SpanBuilder {
 public:
  explicit SpanBuilder(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

  /// Adds v; returns true when it enlarged the span.
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;
  /// Reduced echelon basis, rows sorted by pivot.
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates of v in basis(); nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;

 private:
  Vector reduce(Vector v) const;

  std::size_t dim_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace jordan
