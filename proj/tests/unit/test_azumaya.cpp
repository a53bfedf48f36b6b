#include "doctest.h"
#include "hochlift/azumaya.hpp"
#include "hochlift/corpus.hpp"

using namespace hochlift;

TEST_CASE("separability elements of matrix algebras") {
  for (std::uint64_t p : {2, 3, 5})
    for (std::size_t n : {2, 3}) {
      const auto a = matrix_algebra(Field::prime(p), n);
      const auto z = center(a);
      const auto res = separability_element(a, z);
      REQUIRE(res.element.has_value());
      CHECK(is_separability_element(a, z, *res.element));
      CHECK(res.envelope_dim == n * n * n * n);
    }
}

TEST_CASE("a hand-built separability element and a wrong one") {
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  const auto z = center(a);
  // E11 (x) E11 + E21 (x) E12
  SeparabilityElement good{{}, {{0, 0, k.one()}, {2, 1, k.one()}}};
  CHECK(is_separability_element(a, z, good));
  SeparabilityElement bad{{}, {{0, 0, k.one()}, {1, 2, k.one()}}};
  CHECK(!is_separability_element(a, z, bad));
}

TEST_CASE("commutative algebras over themselves and over the ground field") {
  const auto k = Field::prime(2);
  const auto a = truncated_polynomial(k, {2}).algebra;
  const auto over_self = separability_element(a, center(a));
  REQUIRE(over_self.element.has_value());
  CHECK(over_self.envelope_dim == 2);
  const auto over_k = separability_element(a, Subspace::span(k, 2, {a.unit()}));
  CHECK(!over_k.element.has_value());
  CHECK(over_k.inconsistent_row.has_value());
  CHECK(!separability_element(upper_triangular(Field::prime(3), 2), center(upper_triangular(Field::prime(3), 2)))
             .element.has_value());
}

TEST_CASE("e_M projection") {
  const auto k = Field::prime(3);
  const auto a = matrix_algebra(k, 2);
  const auto z = center(a);
  const auto e = *separability_element(a, z).element;
  const auto rep = e_m_projection(a, z, e, TwistedBimodule{a, FMatrix::identity(k, 4)}.as_bimodule());
  CHECK(rep.idempotent);
  CHECK(rep.z_linear);
  CHECK(rep.image_is_invariants);
  CHECK(rep.image_dim == 1);

  const auto conj = mat2_f3_conjugation();
  const auto rc = e_m_projection(a, z, e, TwistedBimodule{a, conj}.as_bimodule());
  CHECK((rc.idempotent && rc.z_linear && rc.image_is_invariants));

  // M = A (x) A^o-style bimodule A^2 with diagonal action
  Bimodule sum{k, 4, 8, {}, {}};
  const auto m1 = TwistedBimodule{a, FMatrix::identity(k, 4)}.as_bimodule();
  for (std::size_t i = 0; i < 4; ++i) {
    sum.left.push_back(block_diagonal(m1.left[i], m1.left[i]));
    sum.right.push_back(block_diagonal(m1.right[i], m1.right[i]));
  }
  const auto rs = e_m_projection(a, z, e, sum);
  CHECK((rs.idempotent && rs.image_is_invariants && rs.image_dim == 2));

  const auto c = truncated_polynomial(k, {3}).algebra;
  const auto ec = *separability_element(c, center(c)).element;
  const auto rcomm = e_m_projection(c, center(c), ec, TwistedBimodule{c, FMatrix::identity(k, 3)}.as_bimodule());
  CHECK(rcomm.projection == FMatrix::identity(k, 3));
}

TEST_CASE("e_M image is pointwise central") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto k = Field::prime(p);
    const auto a = matrix_algebra(k, 2);
    const auto z = center(a);
    const auto e = *separability_element(a, z).element;
    Rng rng(p);
    FVec u;
    do u = random_vector(rng, k, 4);
    while (!inverse(a, u));
    const auto m = TwistedBimodule{a, *inner_automorphism(a, u)}.as_bimodule();
    const auto rep = e_m_projection(a, z, e, m);
    for (std::size_t c = 0; c < 4; ++c) {
      const auto img = rep.projection.column(c);
      for (std::size_t i = 0; i < 4; ++i) CHECK(m.left[i].apply(img) == m.right[i].apply(img));
    }
    CHECK(rep.image_dim == bimodule_invariants(m).dim());
  }
}

TEST_CASE("center preservation") {
  for (const auto& na : center_corpus()) {
    const auto z = center(na.algebra);
    for (const auto& m : na.morphisms) {
      const auto r = center_preserved(na.algebra, m.matrix);
      bool brute = true;
      for (const auto& v : z.basis()) brute = brute && z.contains(m.matrix.apply(v));
      CHECK(r.preserved == brute);
      if (na.name != "f4_times_mat2f4") CHECK(r.preserved);
    }
  }
  const auto a = f4_times_mat2f4();
  const auto r = center_preserved(a, f4_diag_frobenius());
  REQUIRE(!r.preserved);
  REQUIRE(r.witness.has_value());
  const auto z = center(a);
  CHECK(z.contains(*r.witness));
  CHECK(!z.contains(*r.image));
  // the image fails to commute with some basis element
  bool noncentral = false;
  for (std::size_t i = 0; i < a.dim(); ++i) noncentral = noncentral || !vec_is_zero(a.ring(), a.commutator(*r.image, a.basis(i)));
  CHECK(noncentral);
  CHECK_THROWS_AS(center_preserved(a, FMatrix(a.ring(), 10, 10)), Error);
}

TEST_CASE("azumaya check and block ranks") {
  const auto rep = azumaya_check(f4_times_mat2f4());
  CHECK(rep.separable_over_center);
  CHECK(rep.center_dim == 4);
  REQUIRE(rep.blocks.has_value());
  CHECK(rep.blocks->size() == 2);
  CHECK(rep.constant_rank == false);
  const auto m = azumaya_check(matrix_algebra(Field::prime(3), 2));
  CHECK(m.separable_over_center);
  CHECK(m.constant_rank == true);
  const auto prod = azumaya_check(direct_product(matrix_algebra(Field::prime(2), 2), matrix_algebra(Field::prime(2), 2)));
  CHECK(prod.blocks->size() == 2);
  CHECK(prod.constant_rank == true);
}

TEST_CASE("restriction injectivity probe on the corpus") {
  for (const auto& nl : lift_corpus()) {
    if (!nl.azumaya) {
      CHECK_THROWS_AS(restriction_injectivity_probe(nl.lift, nl.morphisms.front().matrix), Error);
      continue;
    }
    for (const auto& m : nl.morphisms) {
      const auto probe = restriction_injectivity_probe(nl.lift, m.matrix);
      CHECK_MESSAGE(probe.consistent, nl.name << "/" << m.name);
      if (m.name == "identity") CHECK((probe.restricted_solvable && probe.global_solvable));
    }
  }
}
