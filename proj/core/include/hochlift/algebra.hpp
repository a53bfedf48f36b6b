#pragma once

// Finite-dimensional associative algebras given by structure constants.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hochlift/linalg.hpp"
#include "hochlift/matrix.hpp"

namespace hochlift {

template <CoefficientRing Ring>
using SparseVec = std::vector<std::pair<std::size_t, typename Ring::value_type>>;

template <CoefficientRing Ring>
class Algebra {
 public:
  using Scalar = typename Ring::value_type;

  /// products[i * dim + j] is e_i * e_j in the basis.
  Algebra(Ring ring, std::size_t dim, std::vector<SparseVec<Ring>> products, Vec<Ring> unit)
      : ring_(std::move(ring)), dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
    if (dim_ == 0) fail(ErrorKind::DimensionMismatch, "algebra dimension must be positive");
    if (products_.size() != dim_ * dim_) fail(ErrorKind::DimensionMismatch, "need dim^2 structure-constant entries");
    if (unit_.size() != dim_) fail(ErrorKind::DimensionMismatch, "unit vector has wrong length");
    for (auto& sv : products_) {
      std::erase_if(sv, [&](const auto& t) { return ring_.is_zero(t.second); });
      for (const auto& [k, c] : sv)
        if (k >= dim_) fail(ErrorKind::DimensionMismatch, "structure constant index out of range");
    }
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const SparseVec<Ring>& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }
  const std::vector<SparseVec<Ring>>& products() const noexcept { return products_; }
  const Vec<Ring>& unit() const noexcept { return unit_; }

  Vec<Ring> basis(std::size_t i) const { return unit_vector(ring_, dim_, i); }
  Vec<Ring> zero_vector() const { return Vec<Ring>(dim_, ring_.zero()); }

  Vec<Ring> basis_product(std::size_t i, std::size_t j) const {
    Vec<Ring> out = zero_vector();
    for (const auto& [k, c] : product(i, j)) out[k] = c;
    return out;
  }

  Vec<Ring> multiply(const Vec<Ring>& u, const Vec<Ring>& v) const {
    if (u.size() != dim_ || v.size() != dim_) fail(ErrorKind::DimensionMismatch, "operand length must equal algebra dimension");
    Vec<Ring> out = zero_vector();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(u[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (ring_.is_zero(v[j])) continue;
        const Scalar uv = ring_.mul(u[i], v[j]);
        for (const auto& [k, c] : product(i, j)) out[k] = ring_.add(out[k], ring_.mul(uv, c));
      }
    }
    return out;
  }

  Vec<Ring> commutator(const Vec<Ring>& u, const Vec<Ring>& v) const {
    return vec_sub(ring_, multiply(u, v), multiply(v, u));
  }

  /// Matrix of m |-> v*m.
  Matrix<Ring> left_multiplication(const Vec<Ring>& v) const {
    Matrix<Ring> out(ring_, dim_, dim_);
    for (std::size_t c = 0; c < dim_; ++c) out.set_column(c, multiply(v, basis(c)));
    return out;
  }

  /// Matrix of m |-> m*v.
  Matrix<Ring> right_multiplication(const Vec<Ring>& v) const {
    Matrix<Ring> out(ring_, dim_, dim_);
    for (std::size_t c = 0; c < dim_; ++c) out.set_column(c, multiply(basis(c), v));
    return out;
  }

  Vec<Ring> power(Vec<Ring> v, std::uint64_t e) const {
    Vec<Ring> result = unit_;
    while (e > 0) {
      if (e & 1) result = multiply(result, v);
      v = multiply(v, v);
      e >>= 1;
    }
    return result;
  }

 private:
  Ring ring_;
  std::size_t dim_;
  std::vector<SparseVec<Ring>> products_;
  Vec<Ring> unit_;
};

using FAlgebra = Algebra<Field>;
using RAlgebra = Algebra<TruncRing>;

struct AlgebraReport {
  bool associative = false;
  bool unital = false;
  bool commutative = false;
};

template <CoefficientRing Ring>
AlgebraReport validate(const Algebra<Ring>& a);

template <CoefficientRing Ring>
bool is_associative(const Algebra<Ring>& a);

/// f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j) on all basis pairs.
template <CoefficientRing Ring>
bool is_algebra_morphism(const Algebra<Ring>& a, const Matrix<Ring>& f);

/// Center as the kernel of the stacked commutator operators z |-> [z, e_i].
Subspace center(const FAlgebra& a);

/// Structure constants of a unital subalgebra in the subspace's basis.
/// NotASubalgebra if b is not closed under multiplication or lacks the unit.
FAlgebra subalgebra(const FAlgebra& a, const Subspace& b);

struct NotPreserved {
  FVec witness;  // basis vector b of the subspace with f(b) outside it
};

/// Induced map on B in B's basis, or the first basis vector leaving B.
std::variant<FMatrix, NotPreserved> restrict_endo(const FMatrix& f, const Subspace& b);

/// Reduction of structure constants and unit along R -> k.
FAlgebra reduce_algebra(const RAlgebra& a);

/// An A-bimodule structure on k^dim, described by the action matrices of
/// the source algebra's basis elements.
struct Bimodule {
  Field field;
  std::size_t source_dim = 0;
  std::size_t dim = 0;
  std::vector<FMatrix> left;   // left[i]: m |-> e_i . m
  std::vector<FMatrix> right;  // right[i]: m |-> m . e_i

  FMatrix left_action(const FVec& a) const;
  FMatrix right_action(const FVec& a) const;
};

/// A viewed as a bimodule over itself via a.m.b = f(a) m f(b).
struct TwistedBimodule {
  FAlgebra carrier;
  FMatrix twist;

  Bimodule as_bimodule() const;
};

/// Bimodule restricted along the inclusion of B into the source algebra.
Bimodule restrict_bimodule(const Bimodule& m, const Subspace& b);

/// True iff every basis element of B acts identically from both sides.
bool is_b_diagonal(const Bimodule& m, const Subspace& b);
bool is_b_diagonal(const TwistedBimodule& m, const Subspace& b);

/// Bimodule axioms on all basis triples: (ab).m = a.(b.m), m.(ab) = (m.a).b,
/// (a.m).b = a.(m.b), and the unit acting as the identity.
bool satisfies_bimodule_axioms(const FAlgebra& a, const Bimodule& m);

extern template class Algebra<Field>;
extern template class Algebra<TruncRing>;

}  // namespace hochlift
