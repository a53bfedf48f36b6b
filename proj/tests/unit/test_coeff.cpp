#include "doctest.h"
#include "hochlift/coeff.hpp"
#include "hochlift/error.hpp"

using namespace hochlift;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("prime field arithmetic matches integers mod p") {
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    const auto k = Field::prime(p);
    CHECK(k.order() == p);
    for (std::uint64_t a = 0; a < p; ++a)
      for (std::uint64_t b = 0; b < p; ++b) {
        const auto fa = k.from_int(static_cast<std::int64_t>(a)), fb = k.from_int(static_cast<std::int64_t>(b));
        CHECK(k.add(fa, fb).code == (a + b) % p);
        CHECK(k.sub(fa, fb).code == (a + p - b) % p);
        CHECK(k.mul(fa, fb).code == a * b % p);
      }
    for (std::uint64_t a = 1; a < p; ++a) {
      const auto fa = k.from_int(static_cast<std::int64_t>(a));
      CHECK(k.mul(fa, k.inv(fa)) == k.one());
    }
    CHECK(k.from_int(-1).code == p - 1);
  }
}

TEST_CASE("constructors reject bad input") {
  CHECK(throws_kind(ErrorKind::DomainError, [] { Field::prime(9); }));
  CHECK(throws_kind(ErrorKind::DomainError, [] { Field::prime(1); }));
  // x^2 + 1 = (x + 1)^2 over F_2
  CHECK(throws_kind(ErrorKind::DomainError, [] { Field::extension(2, {1, 0, 1}); }));
  // x^4 + x^2 + 1 = (x^2 + x + 1)^2 over F_2: reducible with no roots
  CHECK(throws_kind(ErrorKind::DomainError, [] { Field::extension(2, {1, 0, 1, 0, 1}); }));
  CHECK(throws_kind(ErrorKind::DomainError, [] { Field::extension(2, {1, 1, 1, 1, 1, 1}); }));
  CHECK(throws_kind(ErrorKind::DomainError, [] { TruncRing::zp_squared(4); }));
}

TEST_CASE("extension field axioms are exhaustive for q <= 25") {
  struct Ext {
    std::uint64_t p;
    std::vector<std::uint64_t> modulus;
  };
  for (const auto& s : {Ext{2, {1, 1, 1}}, Ext{3, {1, 0, 1}}, Ext{2, {1, 1, 0, 1}}, Ext{5, {2, 0, 1}},
                        Ext{2, {1, 1, 0, 0, 1}}}) {
    const auto k = Field::extension(s.p, s.modulus);
    const auto elems = k.elements();
    REQUIRE(elems.size() == k.order());
    if (k.order() > 25) {
      for (const auto& a : elems)
        if (!k.is_zero(a)) CHECK(k.mul(a, k.inv(a)) == k.one());
      continue;
    }
    for (const auto& a : elems) {
      if (!k.is_zero(a)) {
        CHECK(k.mul(a, k.inv(a)) == k.one());
        CHECK(k.pow(a, k.order() - 1) == k.one());
      }
      for (const auto& b : elems) {
        CHECK(k.mul(a, b) == k.mul(b, a));
        for (const auto& c : elems) {
          CHECK(k.mul(k.mul(a, b), c) == k.mul(a, k.mul(b, c)));
          CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("F_4 generator has order 3 and coordinates round-trip") {
  const auto k = Field::extension(2, {1, 1, 1});
  const auto w = k.generator();
  CHECK(k.mul(w, w) == k.add(w, k.one()));
  CHECK(k.pow(w, 3) == k.one());
  for (const auto& a : k.elements()) CHECK(k.from_coords(k.coords(a)) == a);
}

TEST_CASE("Z/p^2 arithmetic matches integers mod p^2") {
  for (std::uint64_t p : {2, 3, 5}) {
    const auto R = TruncRing::zp_squared(p);
    const std::uint64_t n = p * p;
    for (std::uint64_t a = 0; a < n; ++a)
      for (std::uint64_t b = 0; b < n; ++b) {
        const auto ra = R.from_zp2_value(a), rb = R.from_zp2_value(b);
        CHECK(R.zp2_value(R.add(ra, rb)) == (a + b) % n);
        CHECK(R.zp2_value(R.mul(ra, rb)) == a * b % n);
        CHECK(R.zp2_value(R.neg(ra)) == (n - a) % n);
        CHECK(R.reduce(R.mul(ra, rb)) == R.residue_field().mul(R.reduce(ra), R.reduce(rb)));
      }
  }
}

TEST_CASE("reduce, iota and pinv on small examples") {
  const auto z4 = TruncRing::zp_squared(2);
  const auto z9 = TruncRing::zp_squared(3);
  const auto z25 = TruncRing::zp_squared(5);
  CHECK(z4.reduce(z4.from_zp2_value(3)).code == 1);
  CHECK(z9.reduce(z9.iota(z9.residue_field().from_int(2))).code == 0);
  CHECK(z9.zp2_value(z9.iota(z9.residue_field().from_int(2))) == 6);
  CHECK(z4.is_zero(z4.mul(z4.iota(z4.residue_field().one()), z4.iota(z4.residue_field().one()))));
  CHECK(z25.pinv(z25.from_zp2_value(10)).code == 2);
  CHECK(throws_kind(ErrorKind::DomainError, [&] { z4.pinv(z4.from_zp2_value(1)); }));

  const auto d5 = TruncRing::dual(Field::prime(5));
  const auto& k5 = d5.residue_field();
  CHECK(d5.reduce(RingElem{k5.from_int(2), k5.from_int(4)}).code == 2);
  const auto d3 = TruncRing::dual(Field::prime(3));
  CHECK(d3.iota(d3.residue_field().from_int(2)) == RingElem{d3.residue_field().zero(), d3.residue_field().from_int(2)});
  const auto d2 = TruncRing::dual(Field::prime(2));
  CHECK(d2.pinv(d2.epsilon()).code == 1);
}

TEST_CASE("exactness and the factorization of the eps-action") {
  std::vector<TruncRing> rings{TruncRing::zp_squared(2), TruncRing::zp_squared(3), TruncRing::zp_squared(5),
                               TruncRing::dual(Field::prime(3)), TruncRing::dual(Field::extension(2, {1, 1, 1}))};
  for (const auto& R : rings) {
    const auto& k = R.residue_field();
    CHECK(R.is_zero(R.mul(R.epsilon(), R.epsilon())));
    std::vector<RingElem> all;
    for (const auto& a : k.elements())
      for (const auto& b : k.elements()) all.push_back({a, b});
    for (const auto& x : all) {
      if (k.is_zero(R.reduce(x))) {
        std::size_t preimages = 0;
        for (const auto& a : k.elements()) preimages += R.iota(a) == x ? 1 : 0;
        CHECK(preimages == 1);
        CHECK(R.iota(R.pinv(x)) == x);
      }
      for (const auto& a : k.elements()) CHECK(R.mul(R.iota(a), x) == R.iota(k.mul(a, R.reduce(x))));
    }
  }
}
