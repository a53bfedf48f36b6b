#include "doctest.h"
#include "hochlift/corpus.hpp"
#include "hochlift/error.hpp"
#include "hochlift/weyl.hpp"

using namespace hochlift;

namespace {

WeylElem mono(std::uint64_t p, bool lifted, std::uint32_t a, std::uint32_t b, std::int64_t c = 1) {
  return WeylElem::monomial(p, lifted, {a}, {b}, c);
}

WeylEndo endo1(const WeylElem& fx, const WeylElem& fd) { return WeylEndo{{fx}, {fd}}; }

}  // namespace

TEST_CASE("normal ordering of small products") {
  const auto x = WeylElem::x(1, 5, false, 0), d = WeylElem::d(1, 5, false, 0);
  CHECK(d * x == x * d + WeylElem::constant(1, 5, false, 1));
  CHECK(commutator(d, x) == WeylElem::constant(1, 5, false, 1));
  CHECK((d * x).to_string() == "x*d + 1");
  // d^2 x^2 = x^2 d^2 + 4 x d + 2
  const auto d2x2 = mono(5, false, 0, 2) * mono(5, false, 2, 0);
  CHECK(d2x2 == mono(5, false, 2, 2) + mono(5, false, 1, 1, 4) + WeylElem::constant(1, 5, false, 2));
  const auto lifted = mono(2, true, 0, 2) * mono(2, true, 2, 0);
  CHECK(lifted == mono(2, true, 2, 2) + WeylElem::constant(1, 2, true, 2));
  CHECK(lifted.modulus() == 4);
}

TEST_CASE("constructor and coefficient rules") {
  CHECK_THROWS_AS(WeylElem(1, 4, false), Error);
  CHECK_THROWS_AS(WeylElem(1, 65537, false), Error);
  CHECK(WeylElem::constant(1, 3, false, 3).is_zero());
  CHECK(!WeylElem::constant(1, 3, true, 3).is_zero());
  CHECK(WeylElem::constant(1, 3, true, 3).pinv() == WeylElem::constant(1, 3, false, 1));
  CHECK_THROWS_AS(WeylElem::constant(1, 3, true, 1).pinv(), Error);
  const auto w = mono(3, false, 1, 2, 2);
  CHECK(w.iota().pinv() == w);
  CHECK(w.section().reduce() == w);
  CHECK_THROWS_AS(WeylElem::x(1, 3, false, 0) * WeylElem::x(1, 5, false, 0), Error);
}

TEST_CASE("associativity and distributivity on random elements") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 7}[t % 4];
    const unsigned n = 1 + static_cast<unsigned>(t % 2);
    const bool lifted = (t / 4) % 2 == 1;
    const auto a = random_weyl(rng, n, p, lifted, 5, 4);
    const auto b = random_weyl(rng, n, p, lifted, 5, 4);
    const auto c = random_weyl(rng, n, p, lifted, 5, 4);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (lifted) CHECK((a * b).reduce() == a.reduce() * b.reduce());
  }
}

TEST_CASE("p-th powers are central over F_p") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto xp = weyl_pow(WeylElem::x(2, p, false, 1), p);
    const auto dp = weyl_pow(WeylElem::d(2, p, false, 0), p);
    for (unsigned i = 0; i < 2; ++i) {
      CHECK(commutator(xp, WeylElem::d(2, p, false, i)).is_zero());
      CHECK(commutator(dp, WeylElem::x(2, p, false, i)).is_zero());
    }
  }
}

TEST_CASE("central rewriting") {
  const std::uint64_t p = 3;
  const auto w = mono(p, false, 3, 0) * mono(p, false, 0, 6) + WeylElem::constant(1, p, false, 2);
  const auto c = central_rewrite(w);
  CHECK(c.to_string() == "X*D^2 + 2");
  CHECK(evaluate(c) == w);
  try {
    central_rewrite(mono(p, false, 1, 1));
    FAIL("expected NotCentral");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCentral);
  }
  Rng rng(9);
  for (int t = 0; t < 30; ++t) {
    CenterPoly cp = center_constant(2, 5, static_cast<std::int64_t>(rng.below(5)));
    for (int k = 0; k < 3; ++k) {
      CenterPoly m = center_constant(2, 5, 1);
      m.terms.clear();
      m.terms[{static_cast<std::uint32_t>(rng.below(3)), static_cast<std::uint32_t>(rng.below(3)),
               static_cast<std::uint32_t>(rng.below(3)), static_cast<std::uint32_t>(rng.below(3))}] = 1 + rng.below(4);
      cp = cp + m;
    }
    CHECK(central_rewrite(evaluate(cp)) == cp);
  }
}

TEST_CASE("bracket constants") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto c = bracket_constants(p, 2);
    REQUIRE(c.size() == 4);
    for (unsigned i = 0; i < 2; ++i) {
      CHECK(c[i][2 + i] == 1);  // {X_i, D_i} = 1
      CHECK(c[2 + i][i] == p - 1);
      CHECK(c[i][i] == 0);
      CHECK(c[i][3 - i] == 0);
    }
  }
}

TEST_CASE("endomorphism recognition") {
  const std::uint64_t p = 5;
  const auto x = WeylElem::x(1, p, false, 0), d = WeylElem::d(1, p, false, 0);
  CHECK(is_weyl_endo(endo1(x, d)));
  CHECK(is_weyl_endo(endo1(x, d + x)));
  const auto bad = endo1(x, d.scaled(2));
  const auto fail = first_failed_relation(bad);
  REQUIRE(fail.has_value());
  CHECK(fail->residual == WeylElem::constant(1, p, false, 1));
  try {
    poisson_check(bad);
    FAIL("expected NotAnEndo");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnEndo);
  }
  try {
    endo1(x, WeylElem::d(1, 3, false, 0)).check_signature();
    FAIL("expected MismatchedSignature");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MismatchedSignature);
  }
}

TEST_CASE("Poisson preservation and lifting") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto x = WeylElem::x(1, p, false, 0), d = WeylElem::d(1, p, false, 0);
    const auto tri = endo1(x, d + x);
    const auto rep = poisson_check(tri);
    CHECK(rep.preserved);
    CHECK(decide_weyl_lift(tri));
    const auto found = search_lift(tri, 4);
    REQUIRE(std::holds_alternative<WeylLift>(found));
    const auto& wl = std::get<WeylLift>(found);
    CHECK(is_weyl_endo(wl.lifted));
    CHECK(wl.lifted.images_x[0].reduce() == x);
    CHECK(wl.lifted.images_d[0].reduce() == d + x);
  }
  const auto ex = p2_weyl_example();
  CHECK(is_weyl_endo(ex));
  CHECK(decide_weyl_lift(ex));
  const auto found = search_lift(ex, 8);
  REQUIRE(std::holds_alternative<WeylLift>(found));
  CHECK(is_weyl_endo(std::get<WeylLift>(found).lifted));
}

TEST_CASE("search_lift agrees with the Poisson test on random triangular maps") {
  Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const std::uint64_t p = t % 2 == 0 ? 2 : 3;
    const auto x = WeylElem::x(1, p, false, 0), d = WeylElem::d(1, p, false, 0);
    // d |-> d + g(x) is always an endomorphism
    WeylElem g(1, p, false);
    for (std::uint32_t k = 0; k <= 4; ++k) g.add_term({k, 0}, static_cast<std::int64_t>(rng.below(p)));
    const auto f = endo1(x, d + g);
    REQUIRE(is_weyl_endo(f));
    const bool preserved = poisson_preserves(f);
    const auto found = search_lift(f, 6);
    if (std::holds_alternative<WeylLift>(found)) {
      CHECK(preserved);
      CHECK(is_weyl_endo(std::get<WeylLift>(found).lifted));
    }
  }
}
