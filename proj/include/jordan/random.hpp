#pragma once

#include <cstdint>
#include <random>

#include "jordan/ncpoly.hpp"
#include "jordan/partition.hpp"
#include "jordan/qmatrix.hpp"
#include "jordan/reps.hpp"

namespace jordan {

/// Seeded sampler for every randomized routine. Rationals have numerators in
/// [-9, 9] and denominators in [1, 4].
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  std::size_t index(std::size_t lo, std::size_t hi);   // uniform in [lo, hi]
  Rational rational();
  Rational nonzero_rational();
  Partition partition(std::size_t n);
  /// Random invertible matrix with rational entries (resampled until invertible).
  QMatrix invertible(std::size_t n);
  /// Unipotent polynomial I + a_1 J + ... + a_{n-1} J^{n-1}.
  QMatrix unipotent_polynomial(std::size_t n);
  /// particular + random combination of the fiber basis.
  RepPair fiber_point(const Partition& p);
  /// Normal polynomial of exact degree d: every y^k x^m with k+m <= d gets a
  /// random coefficient and the degree-d part is forced nonzero.
  NormalPoly normal_poly(std::size_t degree);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Seed from JORDAN_LAB_SEED if set and numeric, otherwise 0.
std::uint64_t default_seed();

}  // namespace jordan
