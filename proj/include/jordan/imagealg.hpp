#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jordan/ncpoly.hpp"
#include "jordan/qmatrix.hpp"
#include "jordan/reps.hpp"

namespace jordan {

/// The unital subalgebra A of M_n generated by X and Y.
struct ImageAlgebra {
  RepPair rep;
  std::vector<QMatrix> basis;     // reduced echelon basis of A (as vectors of length n^2)
  std::size_t dim = 0;
  std::size_t closure_rounds = 0; // rounds until a round added nothing
};

/// Span closure from {I} under right multiplication by X and Y.
ImageAlgebra image_algebra(const RepPair& rep);

/// n(n+2)/4 for even n, (n+1)^2/4 for odd n.
std::size_t dim_bound(std::size_t n);

/// Complete orthogonal system of idempotents of A, one per distinct eigenvalue
/// of X (ascending). They are the spectral projectors of X, which are
/// polynomials in X and sum to I. Throws IrrationalEigenvalues.
std::vector<QMatrix> idempotents(const ImageAlgebra& a);

/// Basis of the Jacobson radical: elements a with trace(a e_i) = 0 for every
/// idempotent e_i. Throws IrrationalEigenvalues.
std::vector<QMatrix> radical_basis(const ImageAlgebra& a);

struct QuiverData {
  std::vector<Rational> vertices;                   // distinct eigenvalues of X
  std::vector<std::vector<std::size_t>> arrows;     // arrows[i][j] = dim e_i (J/J^2) e_j
  friend bool operator==(const QuiverData&, const QuiverData&) = default;
};

/// Throws IrrationalEigenvalues.
QuiverData quiver(const ImageAlgebra& a);

/// Codimension in A of the two-sided ideal generated by the images of gens.
std::size_t ideal_codim(const ImageAlgebra& a, std::span<const NcPoly> gens);

/// Kernel of f -> f(X, Y) on span{y^k x^m : k + m <= max_degree}, as the
/// nullspace basis of the evaluation matrix whose columns follow ascending
/// deglex order. Each relation has a leading monomial of coefficient 1 and
/// otherwise only smaller monomials that are independent modulo the kernel.
std::vector<NormalPoly> discover_relations(const RepPair& rep, std::size_t max_degree);

}  // namespace jordan
