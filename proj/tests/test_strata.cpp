#include <doctest.h>

#include "jordan/error.hpp"
#include "jordan/linalg.hpp"
#include "jordan/random.hpp"
#include "jordan/strata.hpp"
#include "oracles.hpp"

using namespace jordan;

namespace {

// Number of partitions of n by the standard two-index recurrence.
std::size_t partition_count(std::size_t n) {
  std::vector<std::vector<std::size_t>> p(n + 1, std::vector<std::size_t>(n + 1));
  for (std::size_t k = 0; k <= n; ++k) p[0][k] = 1;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t k = 1; k <= n; ++k) p[m][k] = p[m][k - 1] + (k <= m ? p[m - k][k] : 0);
  return p[n][n];
}

RepPair shifted_epsilon(std::size_t k, const Rational& lambda) {
  return RepPair::make(x_zero(k) + QMatrix::identity(k) * lambda, jordan_block(k));
}

RepPair assemble(const std::vector<RepPair>& parts) {
  std::vector<QMatrix> xs, ys;
  for (const auto& r : parts) {
    xs.push_back(r.X());
    ys.push_back(r.Y());
  }
  return RepPair::make(QMatrix::block_diagonal(xs), QMatrix::block_diagonal(ys));
}

}  // namespace

TEST_SUITE("strata") {

TEST_CASE("census rows for n = 4") {
  const auto rows = census(4);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].partition == Partition({4}));
  CHECK(rows[0].fiber_dim == 4);
  CHECK(rows[0].base_dim == 12);
  CHECK(rows[0].tame_label == TameLabel::Tame);
  CHECK(rows[2].partition == Partition({2, 2}));
  CHECK(rows[2].fiber_dim == 8);
  CHECK(rows[2].base_dim == 8);
  CHECK(rows[4].partition == Partition({1, 1, 1, 1}));
  CHECK(rows[4].fiber_dim == 16);
  CHECK(rows[4].base_dim == 0);
  for (const auto& r : rows) {
    CHECK(r.stratum_dim == 16);
    CHECK(r.image_dim_bound == 6);
  }
  CHECK(to_string(TameLabel::Wild) == "wild");
  CHECK(census(5)[0].tame_label == TameLabel::Wild);
  CHECK(census(5)[1].tame_label == TameLabel::Unknown);
}

TEST_CASE("census is equidimensional with p(n) rows") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto rows = census(n);
    CHECK(rows.size() == partition_count(n));
    for (const auto& r : rows) {
      CHECK(r.fiber_dim + r.base_dim == n * n);
      CHECK(r.stratum_dim == n * n);
      CHECK(r.fiber_dim == fiber_dim_formula(r.partition));
    }
  }
}

TEST_CASE("census does not depend on thread count") {
  const auto serial = census(8, 1);
  const auto parallel = census(8, 4);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].partition == parallel[i].partition);
    CHECK(serial[i].fiber_dim == parallel[i].fiber_dim);
  }
}

TEST_CASE("decompose examples") {
  const std::vector<Rational> d{1, 2};
  const Decomposition two = decompose(RepPair::make(QMatrix::diagonal(d), QMatrix::zero(2, 2)));
  REQUIRE(two.summands.size() == 2);
  CHECK(two.summands[0].X() == QMatrix{{1}});
  CHECK(two.summands[1].X() == QMatrix{{2}});
  CHECK(two.summands[0].Y().is_zero());

  const RepPair e3 = shifted_epsilon(3, 5);
  const Decomposition one = decompose(e3);
  REQUIRE(one.summands.size() == 1);
  CHECK(one.eigenvalues == std::vector<Rational>{5});
  CHECK(char_poly(one.summands[0].X()) == char_poly(e3.X()));

  const Decomposition pair = decompose(assemble({shifted_epsilon(2, 1), shifted_epsilon(2, 2)}));
  REQUIRE(pair.summands.size() == 2);
  CHECK(pair.eigenvalues == std::vector<Rational>{1, 2});
  for (const auto& s : pair.summands) {
    CHECK(s.n() == 2);
    CHECK(single_eigenvalue_test(s));
  }
}

TEST_CASE("decompose recovers conjugated assemblies") {
  Sampler s(51);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RepPair> parts;
    std::vector<Rational> used;
    const std::size_t count = s.index(1, 3);
    for (std::size_t i = 0; i < count; ++i) {
      Rational lambda;
      do lambda = s.rational();
      while (std::find(used.begin(), used.end(), lambda) != used.end());
      used.push_back(lambda);
      parts.push_back(shifted_epsilon(s.index(1, 4), lambda));
    }
    const RepPair block = assemble(parts);
    const QMatrix c = s.invertible(block.n());
    const RepPair input = conjugate(block, c);
    const Decomposition d = decompose(input);
    CHECK(d.summands.size() == count);
    std::vector<QMatrix> xs, ys;
    for (const auto& r : d.summands) {
      CHECK(single_eigenvalue_test(r));
      CHECK(relation_residual(r.X(), r.Y()).is_zero());
      xs.push_back(r.X());
      ys.push_back(r.Y());
    }
    const QMatrix& p = d.change_of_basis;
    CHECK(input.X() * p == p * QMatrix::block_diagonal(xs));
    CHECK(input.Y() * p == p * QMatrix::block_diagonal(ys));
    CHECK(single_eigenvalue_test(input) == (count == 1));
  }
}

TEST_CASE("single eigenvalue test") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(single_eigenvalue_test(epsilon_rep(n)));
  const std::vector<Rational> d{1, 2};
  CHECK_FALSE(single_eigenvalue_test(RepPair::make(QMatrix::diagonal(d), QMatrix::zero(2, 2))));
  CHECK(single_eigenvalue_test(canonical_pair(Rational(-3, 2), 4, 5)));
  const RepPair irrational = RepPair::make(QMatrix{{0, 2}, {1, 0}}, QMatrix::zero(2, 2));
  CHECK_FALSE(single_eigenvalue_test(irrational));
  CHECK_THROWS_AS(decompose(irrational), IrrationalEigenvalues);
}

TEST_CASE("jacobian rank") {
  const std::vector<Rational> none;
  const std::vector<Rational> one{Rational(5, 3)};
  CHECK(jacobian_rank(2, none, none) == 0);
  CHECK(jacobian_rank(2, one, one) == 0);
  CHECK(jacobian_rank(3, none, none) == 1);
  CHECK_THROWS_AS(jacobian_rank(1, none, none), OutOfRange);
  const std::vector<Rational> too_many{1, 2, 3};
  CHECK_THROWS_AS(jacobian_rank(3, too_many, none), OutOfRange);
  Sampler s(52);
  for (std::size_t n = 3; n <= 10; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<Rational> c(n - 1), x(n - 1);
      for (auto& e : c) e = s.rational();
      for (auto& e : x) e = s.rational();
      CHECK(jacobian_rank(n, c, x) == n - 2);
    }
  }
}

TEST_CASE("jacobian rank agrees with a direct differential") {
  // Derivative of C(t)^-1 X C(t) along C(t) = C + t J^k at t = 0, one row per k.
  Sampler s(53);
  for (std::size_t n = 3; n <= 6; ++n) {
    std::vector<Rational> c(n - 1), x(n - 1);
    for (auto& e : c) e = s.rational();
    for (auto& e : x) e = s.rational();
    QMatrix cm = QMatrix::identity(n), xm = x_zero(n), jk = QMatrix::identity(n);
    for (std::size_t k = 1; k < n; ++k) {
      jk = jk * jordan_block(n);
      cm += jk * c[k - 1];
      xm += jk * x[k - 1];
    }
    const auto ci = oracle::to_grid(inverse(cm));
    const auto cg = oracle::to_grid(cm), xg = oracle::to_grid(xm);
    oracle::Grid rows;
    oracle::Grid d = oracle::identity(n);
    const auto jg = oracle::to_grid(jordan_block(n));
    for (std::size_t k = 1; k < n; ++k) {
      d = oracle::mul(d, jg);
      auto a = oracle::mul(oracle::mul(ci, xg), d);
      auto b = oracle::mul(oracle::mul(oracle::mul(oracle::mul(ci, d), ci), xg), cg);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] -= b[i][j];
      rows.push_back(oracle::flatten(a));
    }
    CHECK(jacobian_rank(n, c, x) == oracle::rank(rows));
  }
}

}  // TEST_SUITE
