#pragma once

// Separability over the center and its consequences for Hochschild
// cohomology of Azumaya algebras.

#include <optional>
#include <variant>
#include <vector>

#include "hochlift/algebra.hpp"
#include "hochlift/liftkit.hpp"

namespace hochlift {

/// Lambda = (A (x)_k A^o) / span{ z a (x) b - a (x) z b }, materialized as the
/// complement of the pivot columns of the echelonized relation span.
class EnvelopeOverCenter {
 public:
  EnvelopeOverCenter(const FAlgebra& a, const Subspace& z);

  const FAlgebra& algebra() const noexcept { return a_; }
  std::size_t dim() const noexcept { return quotient_basis_.size(); }
  /// Basis tensor e_i (x) e_j of each quotient coordinate, as i * dim(A) + j.
  const std::vector<std::size_t>& quotient_basis() const noexcept { return quotient_basis_; }

  /// Coordinates in Lambda of a tensor given in A (x) A coordinates.
  FVec reduce(FVec tensor) const;
  /// mu(sum c_t x_t (x) y_t) = sum c_t x_t y_t.
  FVec mu(const FVec& coords) const;

 private:
  FAlgebra a_;
  RrefResult relations_;
  std::vector<std::size_t> quotient_basis_;
};

struct TensorTerm {
  std::size_t left = 0, right = 0;  // e_left (x) e_right
  FieldElem coeff;
};

/// e = sum x_i (x) y_i with mu(e) = 1 and (a (x) 1) e = e (1 (x) a), i.e.
/// sum a x_i (x) y_i = sum x_i (x) y_i a.
struct SeparabilityElement {
  FVec coords;  // in the quotient basis of Lambda
  std::vector<TensorTerm> terms;
};

struct SeparabilityResult {
  std::optional<SeparabilityElement> element;
  std::optional<std::size_t> inconsistent_row;  // certificate when absent
  std::size_t envelope_dim = 0;
};

SeparabilityResult separability_element(const FAlgebra& a, const Subspace& z);

/// Checks both defining conditions directly in A (x) A modulo the relations.
bool is_separability_element(const FAlgebra& a, const Subspace& z, const SeparabilityElement& e);

struct ProjectionReport {
  FMatrix projection;
  bool idempotent = false;
  bool z_linear = false;
  bool image_is_invariants = false;
  std::size_t image_dim = 0;
  std::size_t invariants_dim = 0;
};

/// m |-> sum x_i m y_i. Requires M to be Z-diagonal (NotDiagonal otherwise).
ProjectionReport e_m_projection(const FAlgebra& a, const Subspace& z, const SeparabilityElement& e, const Bimodule& m);

/// M^A = { m : a.m = m.a for all a }.
Subspace bimodule_invariants(const Bimodule& m);

struct CenterPreservation {
  bool preserved = true;
  std::optional<FVec> witness;  // central z with f(z) not central
  std::optional<FVec> image;
};

/// f must be additive, multiplicative and unital (an F_p-matrix over the prime
/// field suffices); NotARingMorphism otherwise.
CenterPreservation center_preserved(const FAlgebra& a, const FMatrix& f);

struct BlockRank {
  std::size_t algebra_dim = 0;  // dim_k eA
  std::size_t center_dim = 0;   // dim_k eZ
};

/// Primitive idempotents of the center (via the Frobenius-fixed subalgebra)
/// and the k-dimensions of the corresponding blocks. nullopt when the field is
/// too large for the eigenvalue sweep.
std::optional<std::vector<BlockRank>> central_block_ranks(const FAlgebra& a);

struct AzumayaReport {
  bool separable_over_center = false;
  std::size_t center_dim = 0;
  std::optional<std::vector<BlockRank>> blocks;
  std::optional<bool> constant_rank;
};

AzumayaReport azumaya_check(const FAlgebra& a);

struct InjectivityProbe {
  bool restricted_solvable = false;
  bool global_solvable = false;
  /// false exactly when the restricted class vanishes but the global one does not.
  bool consistent = true;
};

/// NotSeparable if A has no separability element over its center;
/// CenterNotPreserved if f(Z) is not contained in Z.
InjectivityProbe restriction_injectivity_probe(const FlatLift& l, const FMatrix& f);

}  // namespace hochlift
