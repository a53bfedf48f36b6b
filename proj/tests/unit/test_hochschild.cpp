#include "doctest.h"
#include "hochlift/corpus.hpp"
#include "hochlift/hochschild.hpp"

using namespace hochlift;

namespace {

// A random algebra from the builder families with a random algebra endomorphism.
std::pair<FAlgebra, FMatrix> random_algebra_with_twist(Rng& rng, const Field& k) {
  switch (rng.below(4)) {
    case 0: {
      const auto a = matrix_algebra(k, 2);
      FVec u;
      do u = random_vector(rng, k, 4);
      while (!inverse(a, u));
      return {a, *inner_automorphism(a, u)};
    }
    case 1: {
      const std::size_t n = 2 + rng.below(3);
      const std::size_t power = rng.below(n);
      FMatrix f(k, n, n);
      for (std::size_t i = 0; i < n; ++i) f(i * power % n, i) = k.one();
      return {cyclic_group_algebra(k, n), f};
    }
    case 2: {
      const auto t = truncated_polynomial(k, {3});
      const auto x = t.algebra.basis(t.variable(0));
      const auto img = vec_scale(k, random_element(rng, k), x);
      return {t.algebra, monomial_substitution(t, {img})};
    }
    default: {
      const auto a = upper_triangular(k, 2);
      return {a, FMatrix::identity(k, 3)};
    }
  }
}

}  // namespace

TEST_CASE("delta of zero and of a 0-cochain") {
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  const auto complex = HochschildComplex::twisted(a, FMatrix::identity(k, 4));
  for (unsigned n = 0; n <= 2; ++n) CHECK(complex.delta(complex.zero_cochain(n)).is_zero());

  Rng rng(1);
  auto m = complex.zero_cochain(0);
  m.data() = random_vector(rng, k, 4);
  const auto dm = complex.delta(m);
  const FVec mv = m.data();
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(complex.evaluate(dm, a.basis(i)) == a.commutator(a.basis(i), mv));
}

TEST_CASE("delta squares to zero") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    const auto k = Field::prime(std::vector<std::uint64_t>{2, 3, 5}[t % 3]);
    const auto [a, f] = random_algebra_with_twist(rng, k);
    REQUIRE(is_algebra_morphism(a, f));
    const auto complex = HochschildComplex::twisted(a, f);
    const auto c0 = random_cochain(rng, k, 0, a.dim(), a.dim());
    const auto c1 = random_cochain(rng, k, 1, a.dim(), a.dim());
    CHECK(complex.delta(complex.delta(c0)).is_zero());
    CHECK(complex.delta(complex.delta(c1)).is_zero());
  }
}

TEST_CASE("differential matrices agree with delta") {
  Rng rng(4);
  const auto k = Field::prime(5);
  const auto a = upper_triangular(k, 2);
  const auto complex = HochschildComplex::twisted(a, FMatrix::identity(k, 3));
  for (unsigned n = 0; n <= 2; ++n) {
    const auto c = random_cochain(rng, k, n, a.dim(), a.dim());
    CHECK(complex.differential_matrix(n).apply(c.data()) == complex.delta(c).data());
  }
}

TEST_CASE("cocycle predicate") {
  Rng rng(9);
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  const auto complex = HochschildComplex::twisted(a, FMatrix::identity(k, 4));
  CHECK(complex.is_cocycle(complex.delta(random_cochain(rng, k, 1, 4, 4))));
  CHECK(!complex.is_cocycle(random_cochain(rng, k, 2, 4, 4)));
}

TEST_CASE("coboundary solve") {
  Rng rng(10);
  const auto k = Field::prime(3);
  const auto a = tensor_product(matrix_algebra(k, 2), truncated_polynomial(k, {2}).algebra);
  const auto complex = HochschildComplex::twisted(a, FMatrix::identity(k, a.dim()));
  auto res = complex.coboundary_solve(complex.zero_cochain(2));
  REQUIRE(std::holds_alternative<Cochain>(res));
  CHECK(std::get<Cochain>(res).is_zero());
  for (int t = 0; t < 10; ++t) {
    const auto c = complex.delta(random_cochain(rng, k, 1, a.dim(), a.dim()));
    res = complex.coboundary_solve(c);
    REQUIRE(std::holds_alternative<Cochain>(res));
    CHECK(complex.delta(std::get<Cochain>(res)) == c);
  }
  CHECK_THROWS_AS(complex.coboundary_solve(random_cochain(rng, k, 2, a.dim(), a.dim())), Error);
}

TEST_CASE("Hochschild dimensions") {
  const auto k2 = Field::prime(2);
  const auto ground = cyclic_group_algebra(k2, 1);
  const auto c0 = HochschildComplex::twisted(ground, FMatrix::identity(k2, 1));
  CHECK(c0.hh_dim(0) == 1);
  CHECK(c0.hh_dim(1) == 0);
  CHECK(c0.hh_dim(2) == 0);
  const auto m2 = matrix_algebra(k2, 2);
  const auto cm = HochschildComplex::twisted(m2, FMatrix::identity(k2, 4));
  CHECK(cm.hh_dim(0) == center(m2).dim());
  CHECK(cm.hh_dim(1) == 0);
  CHECK(cm.hh_dim(2) == 0);
  const auto dual = truncated_polynomial(k2, {2}).algebra;
  const auto cd = HochschildComplex::twisted(dual, FMatrix::identity(k2, 2));
  CHECK(cd.hh_dim(0) == 2);
  CHECK(cd.hh_dim(1) >= 1);
  for (const auto& nl : lift_corpus()) {
    const auto& a = nl.lift.base();
    if (a.dim() > 8) continue;
    CHECK(HochschildComplex::twisted(a, FMatrix::identity(a.ring(), a.dim())).hh_dim(0) == nl.lift.center().dim());
  }
}

TEST_CASE("restriction commutes with delta") {
  Rng rng(12);
  for (const auto& nl : lift_corpus()) {
    const auto& a = nl.lift.base();
    const auto& z = nl.lift.center();
    const auto& k = a.ring();
    for (const auto& m : nl.morphisms) {
      const auto complex = HochschildComplex::twisted(a, m.matrix);
      const auto restricted = complex.restricted(z);
      const auto h = random_cochain(rng, k, 1, a.dim(), a.dim());
      CHECK(complex.restrict(complex.delta(h), z) == restricted.delta(complex.restrict(h, z)));
      const auto c = complex.delta(h);
      CHECK(restricted.is_cocycle(complex.restrict(c, z)));
      CHECK(complex.restrict(c, Subspace::whole(k, a.dim())) == c);
    }
  }
}

TEST_CASE("symmetry predicate and capacity limits") {
  const auto k = Field::prime(3);
  const auto t = truncated_polynomial(k, {3});
  const auto complex = HochschildComplex::twisted(t.algebra, FMatrix::identity(k, 3));
  Rng rng(2);
  CHECK(is_symmetric(complex.delta(random_cochain(rng, k, 1, 3, 3))));
  CHECK_THROWS_AS(Cochain(k, 3, 65, 65), Error);
  CHECK_THROWS_AS(Cochain(k, 4, 2, 2), Error);
  CHECK_THROWS_AS(complex.delta(complex.zero_cochain(3)), Error);
}
