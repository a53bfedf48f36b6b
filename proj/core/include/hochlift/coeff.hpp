#pragma once

// Exact scalars: prime and small extension fields F_{p^m}, and the two
// first-order truncation rings Z/p^2 and F_{p^m}[t]/(t^2).

#include <compare>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hochlift/error.hpp"

namespace hochlift {

/// Element of F_{p^m}, packed as sum c_i p^i over power-basis coordinates.
struct FieldElem {
  std::uint64_t code = 0;
  friend auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

class Field {
 public:
  using value_type = FieldElem;

  /// Prime field F_p. Throws DomainError unless p is prime and below 2^31.
  static Field prime(std::uint64_t p);

  /// F_p[w]/(modulus); modulus is monic, low-to-high, of degree m in [1, 4].
  /// Irreducibility is verified by exhaustive factor search.
  static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const noexcept { return {0}; }
  FieldElem one() const noexcept { return {1}; }
  /// The generator w of the power basis (requires m > 1; equals p-residue 0 otherwise).
  FieldElem generator() const noexcept { return m_ > 1 ? FieldElem{p_} : FieldElem{0}; }

  FieldElem from_int(std::int64_t v) const noexcept;
  FieldElem from_coords(std::span<const std::uint64_t> coords) const;
  std::vector<std::uint64_t> coords(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const noexcept {
    if (m_ == 1) {
      std::uint64_t s = a.code + b.code;
      return {s >= p_ ? s - p_ : s};
    }
    return add_ext(a, b);
  }
  FieldElem sub(FieldElem a, FieldElem b) const noexcept {
    if (m_ == 1) return {a.code >= b.code ? a.code - b.code : a.code + p_ - b.code};
    return add_ext(a, neg(b));
  }
  FieldElem neg(FieldElem a) const noexcept {
    if (m_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
    return neg_ext(a);
  }
  FieldElem mul(FieldElem a, FieldElem b) const noexcept {
    if (m_ == 1) return {(a.code * b.code) % p_};
    return mul_ext(a, b);
  }
  /// Multiplicative inverse; DomainError on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem pow(FieldElem a, std::uint64_t e) const noexcept;
  bool is_zero(FieldElem a) const noexcept { return a.code == 0; }

  /// All q elements in code order (only sensible for small q).
  std::vector<FieldElem> elements() const;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.p_ == b.p_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint64_t p, std::vector<std::uint64_t> modulus);

  FieldElem add_ext(FieldElem a, FieldElem b) const noexcept;
  FieldElem neg_ext(FieldElem a) const noexcept;
  FieldElem mul_ext(FieldElem a, FieldElem b) const noexcept;

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;  // monic, size m+1
};

bool is_prime(std::uint64_t n) noexcept;

/// Element lo + eps*hi of a truncation ring. For Z/p^2 the pair holds the
/// base-p digits of the residue (value = lo + p*hi); for dual numbers it is
/// a0 + t*a1.
struct RingElem {
  FieldElem lo;
  FieldElem hi;
  friend auto operator<=>(const RingElem&, const RingElem&) = default;
};

/// A local ring R with principal maximal ideal eps*R, eps^2 = 0, R/eps = k.
class TruncRing {
 public:
  using value_type = RingElem;
  enum class Kind { ZpSquared, DualNumbers };

  static TruncRing zp_squared(std::uint64_t p);
  static TruncRing dual(Field residue);

  Kind kind() const noexcept { return kind_; }
  const Field& residue_field() const noexcept { return k_; }

  RingElem zero() const noexcept { return {}; }
  RingElem one() const noexcept { return {k_.one(), k_.zero()}; }
  RingElem epsilon() const noexcept { return {k_.zero(), k_.one()}; }
  RingElem from_int(std::int64_t v) const noexcept;

  RingElem add(RingElem a, RingElem b) const noexcept;
  RingElem sub(RingElem a, RingElem b) const noexcept { return add(a, neg(b)); }
  RingElem neg(RingElem a) const noexcept;
  RingElem mul(RingElem a, RingElem b) const noexcept;
  bool is_zero(RingElem a) const noexcept { return a.lo.code == 0 && a.hi.code == 0; }

  /// pi: R -> k.
  FieldElem reduce(RingElem x) const noexcept { return x.lo; }
  /// iota: k -> eps*R, a |-> eps*a~.
  RingElem iota(FieldElem a) const noexcept { return {k_.zero(), a}; }
  /// p^{-1}: eps*R -> k. DomainError unless reduce(x) == 0.
  FieldElem pinv(RingElem x) const;
  /// Canonical set-theoretic section k -> R (least representative / constant part).
  RingElem section(FieldElem a) const noexcept { return {a, k_.zero()}; }

  /// Residue in [0, p^2) for Z/p^2.
  std::uint64_t zp2_value(RingElem x) const noexcept { return x.lo.code + k_.characteristic() * x.hi.code; }
  RingElem from_zp2_value(std::uint64_t v) const noexcept;

  std::string describe() const;

  friend bool operator==(const TruncRing& a, const TruncRing& b) noexcept {
    return a.kind_ == b.kind_ && a.k_ == b.k_;
  }

 private:
  TruncRing(Kind kind, Field k) : kind_(kind), k_(std::move(k)) {}

  Kind kind_;
  Field k_;
};

template <class R>
concept CoefficientRing = requires(const R& r, typename R::value_type a) {
  { r.zero() } -> std::same_as<typename R::value_type>;
  { r.one() } -> std::same_as<typename R::value_type>;
  { r.add(a, a) } -> std::same_as<typename R::value_type>;
  { r.sub(a, a) } -> std::same_as<typename R::value_type>;
  { r.mul(a, a) } -> std::same_as<typename R::value_type>;
  { r.neg(a) } -> std::same_as<typename R::value_type>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.from_int(std::int64_t{0}) } -> std::same_as<typename R::value_type>;
};

static_assert(CoefficientRing<Field>);
static_assert(CoefficientRing<TruncRing>);

}  // namespace hochlift
