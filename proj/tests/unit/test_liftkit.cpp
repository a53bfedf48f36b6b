#include "doctest.h"
#include "hochlift/corpus.hpp"
#include "hochlift/liftkit.hpp"

using namespace hochlift;

namespace {

const MultiplicativeLift* as_lift(const LiftDecision& d) { return std::get_if<MultiplicativeLift>(&d); }

}  // namespace

TEST_CASE("flat lift validation") {
  CHECK_NOTHROW(mat2_f3_lift());
  CHECK_NOTHROW(logsymp_5_2_3());
  const auto R = TruncRing::zp_squared(3);
  auto perturbed = matrix_algebra(R, 2).products();
  perturbed[1 * 4 + 2] = {{0, R.from_int(2)}};  // E12 E21 = 2 E11, a non-eps change
  const RAlgebra bad(R, 4, perturbed, matrix_algebra(R, 2).unit());
  try {
    FlatLift(matrix_algebra(Field::prime(3), 2), bad);
    FAIL("expected NotALift");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotALift);
  }
  // eps-perturbation that keeps the reduction but breaks associativity
  auto eps_bad = matrix_algebra(R, 2).products();
  eps_bad[1 * 4 + 2] = {{0, R.from_int(4)}};
  try {
    FlatLift(matrix_algebra(Field::prime(3), 2), RAlgebra(R, 4, eps_bad, matrix_algebra(R, 2).unit()));
    FAIL("expected NotAssociative");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAssociative);
  }
}

TEST_CASE("Poisson bracket of the log-symplectic lift") {
  const auto l = logsymp_5_2_3();
  const auto base = logsymp_5_2_3_base();
  const auto& a = base.algebra;
  const auto x = a.basis(base.variable(0)), y = a.basis(base.variable(1));
  CHECK(poisson_bracket(l, x, y) == a.multiply(x, y));
  CHECK(vec_is_zero(a.ring(), poisson_bracket(l, x, x)));
  const auto m = mat2_f3_lift();
  CHECK_THROWS_AS(poisson_bracket(m, m.base().basis(1), m.base().unit()), Error);
  // commutative lift: zero bracket
  const auto R = TruncRing::zp_squared(2);
  const FlatLift c(cyclic_group_algebra(R.residue_field(), 4), cyclic_group_algebra(R, 4));
  for (const auto& row : poisson_center(c).table)
    for (const auto& v : row) CHECK(vec_is_zero(c.field(), v));
}

TEST_CASE("Poisson axioms on the corpus") {
  for (const auto& nl : lift_corpus()) {
    const auto ax = check_poisson_axioms(nl.lift);
    CHECK_MESSAGE(ax.all(), nl.name);
  }
}

TEST_CASE("defect cocycle basics") {
  const auto l = mat2_f3_lift();
  const auto k = l.field();
  const auto id = FMatrix::identity(k, 4);
  CHECK(defect_cocycle(l, id, RMatrix::identity(l.ring(), 4)).is_zero());
  // the conjugation by the lifted matrix is multiplicative over Z/9
  const auto decision = decide_lift(l, mat2_f3_conjugation());
  const auto* ml = as_lift(decision);
  REQUIRE(ml != nullptr);
  CHECK(defect_cocycle(l, mat2_f3_conjugation(), ml->matrix).is_zero());
  CHECK_THROWS_AS(defect_cocycle(l, FMatrix(k, 4, 4), RMatrix(l.ring(), 4, 4)), Error);
  CHECK_THROWS_AS(defect_cocycle(l, id, section(l.ring(), mat2_f3_conjugation())), Error);
}

TEST_CASE("defect is a cocycle and its class is lift-independent") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto c = random_lift_case(rng, std::vector<std::uint64_t>{2, 3, 5}[t % 3]);
    const auto complex = HochschildComplex::twisted(c.lift.base(), c.morphism);
    const auto ft1 = random_linear_lift(rng, c.lift, c.morphism);
    const auto ft2 = random_linear_lift(rng, c.lift, c.morphism);
    const auto c1 = defect_cocycle(c.lift, c.morphism, ft1);
    const auto c2 = defect_cocycle(c.lift, c.morphism, ft2);
    CHECK(complex.is_cocycle(c1));
    const auto h = lift_difference(c.lift, ft1, ft2);
    CHECK(c2 - c1 == complex.delta(h));
    const auto solved = complex.coboundary_solve(c2 - c1);
    REQUIRE(std::holds_alternative<Cochain>(solved));
    CHECK(complex.delta(std::get<Cochain>(solved)) == c2 - c1);
  }
}

TEST_CASE("decide_lift on the named examples") {
  const auto l = mat2_f3_lift();
  const auto d = decide_lift(l, mat2_f3_conjugation());
  const auto* ml = as_lift(d);
  REQUIRE(ml != nullptr);
  CHECK(is_multiplicative_lift(l, ml->matrix));
  CHECK(reduce(l.ring(), ml->matrix) == mat2_f3_conjugation());
  CHECK(ml->matrix.apply(l.lift().unit()) == l.lift().unit());

  const auto id = decide_lift(l, FMatrix::identity(l.field(), 4));
  REQUIRE(as_lift(id) != nullptr);
  CHECK(as_lift(id)->matrix == RMatrix::identity(l.ring(), 4));

  const auto ls = logsymp_5_2_3();
  const auto neg = decide_lift(ls, y_to_ysq());
  REQUIRE(std::holds_alternative<Obstruction>(neg));
  const auto& ob = std::get<Obstruction>(neg);
  CHECK(HochschildComplex::twisted(ls.base(), y_to_ysq()).is_cocycle(ob.cocycle));
  CHECK(!is_symmetric(ob.cocycle));
}

TEST_CASE("antisymmetrization identity on the log-symplectic example") {
  const auto l = logsymp_5_2_3();
  const auto base = logsymp_5_2_3_base();
  const auto& a = base.algebra;
  const auto& k = a.ring();
  const auto rep = antisym_check(l, y_to_ysq());
  CHECK(rep.identity_holds);
  CHECK(!rep.bracket_preserved);
  CHECK(!rep.restricted_symmetric);
  const auto x = base.variable(0), y = base.variable(1);
  const auto xy2 = a.multiply(a.basis(x), a.multiply(a.basis(y), a.basis(y)));
  bool seen = false;
  for (const auto& e : rep.entries) {
    // center basis of a commutative algebra is the standard basis
    if (e.i == std::min(x, y) && e.j == std::max(x, y)) {
      const auto expected = x < y ? xy2 : vec_scale(k, k.from_int(-1), xy2);
      CHECK(e.rhs == expected);
      CHECK(e.lhs == expected);
      seen = true;
    }
  }
  CHECK(seen);
  CHECK(antisym_check(l, FMatrix::identity(k, a.dim())).bracket_preserved);
  CHECK_THROWS_AS(antisym_check(FlatLift(f4_times_mat2f4(), matrix_algebra(TruncRing::zp_squared(2), 1)),
                                f4_diag_frobenius()),
                  Error);
}

TEST_CASE("antisymmetrization does not depend on the linear lift") {
  Rng rng(77);
  for (int t = 0; t < 30; ++t) {
    const auto c = random_lift_case(rng, std::vector<std::uint64_t>{2, 3, 5}[t % 3]);
    const auto ref = antisym_check(c.lift, c.morphism);
    CHECK(ref.identity_holds);
    for (int r = 0; r < 10; ++r) {
      const auto other = antisym_check(c.lift, c.morphism, random_linear_lift(rng, c.lift, c.morphism));
      REQUIRE(other.entries.size() == ref.entries.size());
      for (std::size_t e = 0; e < ref.entries.size(); ++e) {
        CHECK(other.entries[e].lhs == ref.entries[e].lhs);
        CHECK(other.entries[e].rhs == ref.entries[e].rhs);
      }
    }
    if (std::holds_alternative<MultiplicativeLift>(decide_lift(c.lift, c.morphism))) CHECK(ref.bracket_preserved);
  }
}

TEST_CASE("square-zero extensions") {
  const auto k = Field::prime(3);
  const auto z = truncated_polynomial(k, {2}).algebra;
  const auto m = TwistedBimodule{z, FMatrix::identity(k, 2)}.as_bimodule();
  const HochschildComplex complex(z, m);
  auto e = build_square_zero_extension(z, m, complex.zero_cochain(2));
  CHECK(e.dim() == 4);
  auto r = validate(e);
  CHECK((r.associative && r.commutative && r.unital));

  Rng rng(6);
  const auto sym = complex.delta(random_cochain(rng, k, 1, 2, 2));
  r = validate(build_square_zero_extension(z, m, sym));
  CHECK((r.associative && r.commutative));
  auto sol = symmetric_coboundary_check(z, m, sym);
  REQUIRE(std::holds_alternative<Cochain>(sol));
  CHECK(complex.delta(std::get<Cochain>(sol)) == sym);

  Cochain bad(k, 2, 2, 2);
  do bad = random_cochain(rng, k, 2, 2, 2);
  while (complex.is_cocycle(bad));
  CHECK(!validate(build_square_zero_extension(z, m, bad)).associative);
  CHECK_THROWS_AS(symmetric_coboundary_check(z, m, bad), Error);

  const auto nc = matrix_algebra(k, 2);
  CHECK_THROWS_AS(build_square_zero_extension(nc, TwistedBimodule{nc, FMatrix::identity(k, 4)}.as_bimodule(),
                                              Cochain(k, 2, 4, 4)),
                  Error);
}

TEST_CASE("square-zero extension: associativity tracks the cocycle condition") {
  Rng rng(55);
  for (int t = 0; t < 50; ++t) {
    const auto c = random_extension_case(rng, std::vector<std::uint64_t>{2, 3, 5}[t % 3]);
    const HochschildComplex complex(c.z, c.m);
    const auto r = validate(build_square_zero_extension(c.z, c.m, c.phi));
    CHECK(r.associative == complex.is_cocycle(c.phi));
    CHECK(r.commutative == is_symmetric(c.phi));
  }
}
