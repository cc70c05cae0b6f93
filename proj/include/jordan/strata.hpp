#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "jordan/partition.hpp"
#include "jordan/qmatrix.hpp"
#include "jordan/reps.hpp"

namespace jordan {

enum class TameLabel { Tame, Wild, Unknown };

std::string to_string(TameLabel label);

/// One stratum of mod(R, n): pairs (X, Y) with Y of Jordan type `partition`.
/// fiber = solutions X for a fixed Y (the centralizer dimension), base = the
/// conjugacy class of Y.
struct StratumInfo {
  Partition partition;
  std::size_t fiber_dim = 0;
  std::size_t base_dim = 0;
  std::size_t stratum_dim = 0;
  std::size_t image_dim_bound = 0;
  TameLabel tame_label = TameLabel::Unknown;
};

/// Tame for the full-block stratum with n <= 4, Wild for the full-block
/// stratum with n >= 5, Unknown otherwise.
TameLabel tame_label(const Partition& p);

/// One row per partition of n, in partitions(n) order. Rows are computed in
/// parallel when threads > 1; the output does not depend on threads.
std::vector<StratumInfo> census(std::size_t n, unsigned threads = 1);

struct Decomposition {
  std::vector<RepPair> summands;      // one per distinct eigenvalue of X, ascending
  std::vector<Rational> eigenvalues;
  QMatrix change_of_basis;            // P with P^-1 X P = blockdiag(summand X), same for Y
};

/// Restriction of (X, Y) to the generalized eigenspaces of X. Throws
/// IrrationalEigenvalues.
Decomposition decompose(const RepPair& rep);

/// True iff char_poly(X) = (t - lambda)^n for a rational lambda. A false
/// answer proves the module decomposes; true does not prove indecomposability.
bool single_eigenvalue_test(const RepPair& rep);

/// Rank of D -> C^-1 X D - C^-1 D C^-1 X C on D in {J, J^2, ..., J^(n-1)} where
/// C = I + sum c_coeffs[k-1] J^k and X = x_zero(n) + sum x_coeffs[k-1] J^k.
/// Throws OutOfRange for n < 2 or more than n-1 coefficients.
std::size_t jacobian_rank(std::size_t n, std::span<const Rational> c_coeffs, std::span<const Rational> x_coeffs);

}  // namespace jordan
