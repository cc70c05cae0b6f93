#include "jordan/random.hpp"

#include <cstdlib>
#include <string>

#include "jordan/linalg.hpp"

namespace jordan {

std::size_t Sampler::index(std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Rational Sampler::rational() {
  const long num = std::uniform_int_distribution<long>(-9, 9)(engine_);
  const long den = std::uniform_int_distribution<long>(1, 4)(engine_);
  return Rational(num, den);
}

Rational Sampler::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

Partition Sampler::partition(std::size_t n) {
  const auto all = partitions(n);
  return all[index(0, all.size() - 1)];
}

QMatrix Sampler::invertible(std::size_t n) {
  for (;;) {
    QMatrix c(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(i, j) = rational();
    if (rank(c) == n) return c;
  }
}

QMatrix Sampler::unipotent_polynomial(std::size_t n) {
  const QMatrix j = jordan_block(n);
  QMatrix c = QMatrix::identity(n);
  QMatrix power = QMatrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = power * j;
    c += power * rational();
  }
  return c;
}

RepPair Sampler::fiber_point(const Partition& p) {
  const Fiber fiber = fiber_basis(p);
  QMatrix x = fiber.particular;
  for (const auto& b : fiber.basis) x += b * rational();
  return RepPair::make(std::move(x), jordan_matrix(p), p);
}

NormalPoly Sampler::normal_poly(std::size_t degree) {
  for (;;) {
    NormalPoly f;
    for (std::size_t d = 0; d <= degree; ++d)
      for (std::size_t m = 0; m <= d; ++m) f.add_term(d - m, m, rational());
    if (static_cast<std::size_t>(f.degree()) == degree && !f.is_zero()) return f;
  }
}

std::uint64_t default_seed() {
  const char* env = std::getenv("JORDAN_LAB_SEED");
  if (!env || !*env) return 0;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  return 0;
}

}  // namespace jordan
