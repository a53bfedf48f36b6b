#include "doctest.h"
#include "hochlift/builders.hpp"
#include "hochlift/corpus.hpp"

using namespace hochlift;

TEST_CASE("multiply on matrix units and truncations") {
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  CHECK(a.multiply(a.basis(1), a.basis(2)) == a.basis(0));  // E12 E21 = E11
  CHECK(a.multiply(a.unit(), a.basis(3)) == a.basis(3));
  const auto t = truncated_polynomial(Field::prime(2), {2});
  const auto x = t.algebra.basis(t.variable(0));
  CHECK(vec_is_zero(t.algebra.ring(), t.algebra.multiply(x, x)));
}

TEST_CASE("validate on the standard examples") {
  auto r = validate(matrix_algebra(Field::prime(3), 2));
  CHECK(r.associative);
  CHECK(r.unital);
  CHECK(!r.commutative);
  r = validate(truncated_polynomial(Field::prime(5), {2, 3}).algebra);
  CHECK((r.associative && r.unital && r.commutative));

  // e1 e1 = e2, e2 e1 = e1, nothing else, with a bogus unit
  const auto k = Field::prime(3);
  std::vector<SparseVec<Field>> sc(4);
  sc[0].emplace_back(1, k.one());
  sc[2].emplace_back(0, k.one());
  r = validate(FAlgebra(k, 2, sc, FVec{k.one(), k.zero()}));
  CHECK(!r.unital);
}

TEST_CASE("centers") {
  const auto k3 = Field::prime(3);
  const auto m2 = matrix_algebra(k3, 2);
  const auto z = center(m2);
  CHECK(z.dim() == 1);
  CHECK(z.contains(m2.unit()));
  const auto t = truncated_polynomial(Field::prime(5), {2, 3});
  CHECK(center(t.algebra).dim() == t.algebra.dim());
  CHECK(center(upper_triangular(k3, 3)).dim() == 1);
  const auto big = f4_times_mat2f4();
  CHECK(big.dim() == 10);
  CHECK(center(big).dim() == 4);
  CHECK(validate(big).associative);
}

TEST_CASE("morphisms") {
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  CHECK(is_algebra_morphism(a, FMatrix::identity(k, 4)));
  CHECK(is_algebra_morphism(a, mat2_f3_conjugation()));
  CHECK(!is_algebra_morphism(a, FMatrix(k, 4, 4)));
  const auto big = f4_times_mat2f4();
  CHECK(is_algebra_morphism(big, f4_diag_frobenius()));
}

TEST_CASE("diagonal bimodules and restriction of endomorphisms") {
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  const auto z = center(a);
  const auto conj = mat2_f3_conjugation();
  CHECK(is_b_diagonal(TwistedBimodule{a, conj}, z));
  CHECK(!is_b_diagonal(TwistedBimodule{a, FMatrix::identity(k, 4)}, Subspace::whole(k, 4)));
  const auto t = truncated_polynomial(Field::prime(5), {2, 3});
  CHECK(is_b_diagonal(TwistedBimodule{t.algebra, y_to_ysq()}, Subspace::whole(t.algebra.ring(), 6)));

  auto r = restrict_endo(conj, z);
  REQUIRE(std::holds_alternative<FMatrix>(r));
  CHECK(std::get<FMatrix>(r) == FMatrix::identity(k, 1));
  r = restrict_endo(FMatrix::identity(k, 4), z);
  CHECK(std::get<FMatrix>(r) == FMatrix::identity(k, 1));
  const auto big = f4_times_mat2f4();
  CHECK(std::holds_alternative<NotPreserved>(restrict_endo(f4_diag_frobenius(), center(big))));
}

TEST_CASE("builder families are associative and unital") {
  const auto k = Field::prime(3);
  const auto R = TruncRing::zp_squared(3);
  const auto f4 = Field::extension(2, {1, 1, 1});
  std::vector<AlgebraReport> reports{
      validate(direct_product(matrix_algebra(k, 2), cyclic_group_algebra(k, 3))),
      validate(tensor_product(matrix_algebra(k, 2), truncated_polynomial(k, {2}).algebra)),
      validate(upper_triangular(k, 3)),
      validate(truncated_polynomial(k, {3, 3}, {{1, 1}}).algebra),
      validate(restrict_scalars(matrix_algebra(f4, 2))),
      validate(matrix_algebra(R, 2)),
      validate(gauge_transform(matrix_algebra(R, 2), FMatrix::identity(k, 4))),
  };
  for (const auto& r : reports) {
    CHECK(r.associative);
    CHECK(r.unital);
  }
  CHECK(restrict_scalars(matrix_algebra(f4, 2)).dim() == 8);
  const auto ls = log_symplectic_lift(R, 2, 3);
  CHECK(validate(ls.lift).associative);
  CHECK(!validate(ls.lift).commutative);
}

TEST_CASE("center is a unital subalgebra across random algebras") {
  Rng rng(21);
  for (int t = 0; t < 50; ++t) {
    const auto k = Field::prime(std::vector<std::uint64_t>{2, 3, 5}[t % 3]);
    FAlgebra a = matrix_algebra(k, 2);
    switch (rng.below(5)) {
      case 0: a = cyclic_group_algebra(k, 2 + rng.below(4)); break;
      case 1: a = upper_triangular(k, 2 + rng.below(2)); break;
      case 2: a = direct_product(matrix_algebra(k, 2), cyclic_group_algebra(k, 2)); break;
      case 3: a = tensor_product(upper_triangular(k, 2), truncated_polynomial(k, {2}).algebra); break;
      default: break;
    }
    const auto z = center(a);
    CHECK(z.contains(a.unit()));
    for (const auto& u : z.basis())
      for (const auto& v : z.basis()) CHECK(z.contains(a.multiply(u, v)));
    CHECK_NOTHROW(subalgebra(a, z));
  }
}

TEST_CASE("compositions of morphisms and twisted bimodule axioms") {
  Rng rng(8);
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  for (int t = 0; t < 20; ++t) {
    FVec u, v;
    do u = random_vector(rng, k, 4);
    while (!inverse(a, u));
    do v = random_vector(rng, k, 4);
    while (!inverse(a, v));
    const auto f = *inner_automorphism(a, u), g = *inner_automorphism(a, v);
    CHECK(is_algebra_morphism(a, f.compose(g)));
    CHECK(satisfies_bimodule_axioms(a, TwistedBimodule{a, f}.as_bimodule()));
  }
  for (const auto& nl : lift_corpus())
    for (const auto& m : nl.morphisms) {
      CHECK(is_algebra_morphism(nl.lift.base(), m.matrix));
      CHECK(satisfies_bimodule_axioms(nl.lift.base(), TwistedBimodule{nl.lift.base(), m.matrix}.as_bimodule()));
    }
}

TEST_CASE("subalgebra rejects non-closed subspaces") {
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  CHECK_THROWS_AS(subalgebra(a, Subspace::span(k, 4, {a.basis(1)})), Error);
  const auto diag = Subspace::span(k, 4, {a.basis(0), a.basis(3)});
  CHECK(subalgebra(a, diag).dim() == 2);
}
