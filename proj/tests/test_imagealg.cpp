#include <doctest.h>

#include "jordan/error.hpp"
#include "jordan/imagealg.hpp"
#include "jordan/jordan_plane.hpp"
#include "jordan/linalg.hpp"
#include "jordan/poly_parse.hpp"
#include "jordan/random.hpp"
#include "oracles.hpp"

using namespace jordan;

namespace {

std::vector<NcPoly> wild_gens() {
  return {parse_ncpoly("y^2"), parse_ncpoly("x^2*y"), parse_ncpoly("x^3"), parse_ncpoly("x*y - y*x")};
}

RepPair one_dim(const Rational& lambda) { return RepPair::make(QMatrix{{lambda}}, QMatrix{{0}}); }

RepPair diag12() {
  const std::vector<Rational> d{1, 2};
  return RepPair::make(QMatrix::diagonal(d), QMatrix::zero(2, 2));
}

RepPair random_rep(Sampler& s, std::size_t n) {
  return conjugate(s.fiber_point(s.partition(n)), s.invertible(n));
}

// Random rep whose X has only rational eigenvalues.
RepPair random_split_rep(Sampler& s, std::size_t n) {
  for (;;) {
    RepPair r = random_rep(s, n);
    if (spectral_splitting(r.X())) return r;
  }
}

}  // namespace

TEST_SUITE("imagealg") {

TEST_CASE("image algebra dimension of epsilon_n") {
  const std::vector<std::size_t> expected{1, 2, 4, 6, 9, 12, 16, 20, 25, 30, 36, 42};
  for (std::size_t n = 1; n <= 12; ++n) {
    CHECK(image_algebra(epsilon_rep(n)).dim == expected[n - 1]);
    CHECK(dim_bound(n) == expected[n - 1]);
  }
  for (std::size_t n = 1; n <= 6; ++n) {
    const RepPair e = epsilon_rep(n);
    CHECK(image_algebra(e).dim == oracle::word_span_dim(oracle::to_grid(e.X()), oracle::to_grid(e.Y()), 2 * n));
  }
  CHECK(image_algebra(one_dim(5)).dim == 1);
  CHECK(dim_bound(6) == 12);
  CHECK(dim_bound(7) == 16);
  CHECK(dim_bound(1) == 1);
}

TEST_CASE("image dimension is bounded and conjugation invariant") {
  Sampler s(41);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = s.index(1, 6);
    const RepPair r = random_split_rep(s, n);
    const ImageAlgebra a = image_algebra(r);
    CHECK(a.dim <= dim_bound(n));
    CHECK(a.dim == oracle::word_span_dim(oracle::to_grid(r.X()), oracle::to_grid(r.Y()), 2 * n));
    const RepPair moved = conjugate(r, s.invertible(n));
    const ImageAlgebra b = image_algebra(moved);
    CHECK(b.dim == a.dim);
    const QuiverData qa = quiver(a), qb = quiver(b);
    CHECK(qa == qb);
  }
}

TEST_CASE("radical") {
  const ImageAlgebra a3 = image_algebra(epsilon_rep(3));
  CHECK(radical_basis(a3).size() == 3);
  CHECK(radical_basis(image_algebra(one_dim(2))).empty());
  CHECK(radical_basis(image_algebra(diag12())).empty());
  Sampler s(42);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = s.index(1, 6);
    const ImageAlgebra a = image_algebra(random_split_rep(s, n));
    const auto rad = radical_basis(a);
    const auto idem = idempotents(a);
    CHECK(a.dim == rad.size() + idem.size());
    for (const auto& r : rad) {
      const auto idx = nilpotency_index(r);
      REQUIRE(idx.has_value());
      CHECK(*idx <= n);
    }
  }
}

TEST_CASE("idempotents") {
  const auto e = idempotents(image_algebra(diag12()));
  REQUIRE(e.size() == 2);
  const std::vector<Rational> first{1, 0}, second{0, 1};
  CHECK(e[0] == QMatrix::diagonal(first));
  CHECK(e[1] == QMatrix::diagonal(second));
  const auto single = idempotents(image_algebra(canonical_pair(2, 1, 4)));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == QMatrix::identity(4));
}

TEST_CASE("quiver") {
  for (std::size_t n = 3; n <= 7; ++n) {
    const QuiverData q = quiver(image_algebra(epsilon_rep(n)));
    CHECK(q.vertices == std::vector<Rational>{0});
    CHECK(q.arrows == std::vector<std::vector<std::size_t>>{{2}});
  }
  CHECK(quiver(image_algebra(one_dim(4))).arrows == std::vector<std::vector<std::size_t>>{{0}});
  CHECK(quiver(image_algebra(epsilon_rep(2))).arrows == std::vector<std::vector<std::size_t>>{{1}});
  const QuiverData two = quiver(image_algebra(diag12()));
  CHECK(two.vertices == std::vector<Rational>{1, 2});
  CHECK(two.arrows == std::vector<std::vector<std::size_t>>{{0, 0}, {0, 0}});
}

TEST_CASE("ideal codimension") {
  const auto gens = wild_gens();
  for (std::size_t n = 5; n <= 8; ++n) CHECK(ideal_codim(image_algebra(epsilon_rep(n)), gens) == 5);
  std::vector<oracle::Grid> gm;
  for (std::size_t n = 1; n <= 6; ++n) {
    const RepPair e = epsilon_rep(n);
    const auto gx = oracle::to_grid(e.X()), gy = oracle::to_grid(e.Y());
    gm.clear();
    for (const auto& g : gens) gm.push_back(oracle::eval_words(oracle::from_ncpoly(g), gx, gy));
    const auto basis = oracle::word_basis(gx, gy, 2 * n);
    const std::size_t i_dim = oracle::two_sided_ideal_dim(basis, gm);
    CHECK(ideal_codim(image_algebra(e), gens) == basis.size() - i_dim);
  }
  CHECK(ideal_codim(image_algebra(epsilon_rep(4)), std::vector<NcPoly>{NcPoly::constant(1)}) == 0);
  CHECK(ideal_codim(image_algebra(epsilon_rep(4)), std::vector<NcPoly>{}) == 6);
}

TEST_CASE("relations of A_4") {
  const RepPair e4 = epsilon_rep(4);
  const auto rels = discover_relations(e4, 3);
  // x^2 + 2xy, written on the normal basis.
  const NormalPoly quadratic = normal_form(parse_ncpoly("x^2 + 2*x*y"));
  const NormalPoly cubic = NormalPoly::monomial(0, 3);
  bool has_quadratic = false, has_cubic = false;
  for (const auto& r : rels) {
    CHECK(eval(r, e4).is_zero());
    has_quadratic = has_quadratic || r == quadratic;
    has_cubic = has_cubic || r == cubic;
  }
  CHECK(has_quadratic);
  CHECK(has_cubic);
  // The opposite sign is not a relation under this convention.
  CHECK_FALSE(eval(parse_ncpoly("x^2 - 2*x*y"), e4).is_zero());
}

TEST_CASE("relation examples and kernel dimension") {
  const auto r1 = discover_relations(epsilon_rep(1), 1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == NormalPoly::monomial(1, 0));
  CHECK(r1[1] == NormalPoly::monomial(0, 1));
  Sampler s(43);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = s.index(1, 5);
    const RepPair r = random_rep(s, n);
    CHECK(discover_relations(r, 0).empty());
    const std::size_t d = s.index(1, 4);
    const auto rels = discover_relations(r, d);
    for (const auto& f : rels) CHECK(eval(f, r).is_zero());
    // Kernel dimension = number of monomials - rank of the evaluation map.
    oracle::Grid rows;
    std::size_t monomials = 0;
    for (std::size_t deg = 0; deg <= d; ++deg)
      for (std::size_t m = 0; m <= deg; ++m, ++monomials)
        rows.push_back(oracle::flatten(oracle::to_grid(eval(NormalPoly::monomial(deg - m, m), r))));
    CHECK(rels.size() == monomials - oracle::rank(rows));
  }
}

TEST_CASE("irrational spectra are rejected") {
  // X with eigenvalues +-sqrt(2), Y = 0.
  const RepPair r = RepPair::make(QMatrix{{0, 2}, {1, 0}}, QMatrix::zero(2, 2));
  const ImageAlgebra a = image_algebra(r);
  CHECK(a.dim == 2);
  CHECK_THROWS_AS(idempotents(a), IrrationalEigenvalues);
  CHECK_THROWS_AS(quiver(a), IrrationalEigenvalues);
}

}  // TEST_SUITE
