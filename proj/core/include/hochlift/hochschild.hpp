#pragma once

// Hochschild cochains C^n(A/k, M), n <= 3, with the differential
//
//   (dc)(a_1..a_{n+1}) = a_1 . c(a_2..a_{n+1})
//                        + sum_{i=1}^{n} (-1)^i c(.., a_i a_{i+1}, ..)
//                        + (-1)^{n+1} c(a_1..a_n) . a_{n+1}

#include <span>
#include <vector>

#include "hochlift/algebra.hpp"
#include "hochlift/linalg.hpp"

namespace hochlift {

/// Dense n-multilinear map A^{(x)n} -> M. Values for the basis tuple
/// (i_1..i_n) occupy the slice starting at (sum i_k dim^{n-k}) * module_dim.
class Cochain {
 public:
  Cochain(Field k, unsigned degree, std::size_t source_dim, std::size_t module_dim);

  const Field& field() const noexcept { return k_; }
  unsigned degree() const noexcept { return degree_; }
  std::size_t source_dim() const noexcept { return source_dim_; }
  std::size_t module_dim() const noexcept { return module_dim_; }
  std::size_t tuple_count() const noexcept { return tuples_; }

  std::span<FieldElem> at(std::span<const std::size_t> idx);
  std::span<const FieldElem> at(std::span<const std::size_t> idx) const;
  std::span<FieldElem> at_flat(std::size_t tuple) { return {data_.data() + tuple * module_dim_, module_dim_}; }
  std::span<const FieldElem> at_flat(std::size_t tuple) const { return {data_.data() + tuple * module_dim_, module_dim_}; }
  FVec value(std::span<const std::size_t> idx) const {
    auto s = at(idx);
    return {s.begin(), s.end()};
  }

  std::vector<FieldElem>& data() noexcept { return data_; }
  const std::vector<FieldElem>& data() const noexcept { return data_; }

  bool is_zero() const;
  Cochain operator+(const Cochain& rhs) const;
  Cochain operator-(const Cochain& rhs) const;

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.source_dim_ == b.source_dim_ && a.module_dim_ == b.module_dim_ &&
           a.data_ == b.data_;
  }

 private:
  std::size_t flat(std::span<const std::size_t> idx) const;

  Field k_;
  unsigned degree_;
  std::size_t source_dim_;
  std::size_t module_dim_;
  std::size_t tuples_;
  std::vector<FieldElem> data_;
};

/// Largest number of dense field entries any single cochain or differential
/// matrix may occupy; exceeding it raises CapacityExceeded.
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 24;

class HochschildComplex {
 public:
  HochschildComplex(FAlgebra algebra, Bimodule module);
  /// C^.(A/k, A_f) for the f-twisted bimodule.
  static HochschildComplex twisted(const FAlgebra& a, const FMatrix& f);

  const FAlgebra& algebra() const noexcept { return algebra_; }
  const Bimodule& module() const noexcept { return module_; }
  const Field& field() const noexcept { return algebra_.ring(); }

  Cochain zero_cochain(unsigned degree) const;
  std::size_t cochain_dim(unsigned degree) const;

  /// delta^n for n <= 2; DegreeOutOfRange otherwise.
  Cochain delta(const Cochain& c) const;
  bool is_cocycle(const Cochain& c) const;

  /// Matrix of delta^n : C^n -> C^{n+1} in the flattened cochain coordinates.
  FMatrix differential_matrix(unsigned n) const;

  /// h with delta(h) = c, or Infeasible. NotACocycle if c is not closed.
  OrInfeasible<Cochain> coboundary_solve(const Cochain& c) const;

  /// dim HH^n = dim ker delta^n - rank delta^{n-1}, n in {0, 1, 2}.
  std::size_t hh_dim(unsigned n) const;

  /// Multilinear evaluation of a degree-2 cochain on arbitrary elements.
  FVec evaluate(const Cochain& c, const FVec& a, const FVec& b) const;
  /// Multilinear evaluation of a degree-1 cochain.
  FVec evaluate(const Cochain& c, const FVec& a) const;

  /// The complex for the subalgebra B with M restricted along B -> A.
  HochschildComplex restricted(const Subspace& b) const;
  /// c evaluated on tuples of B's basis, M unchanged.
  Cochain restrict(const Cochain& c, const Subspace& b) const;

 private:
  void check(const Cochain& c) const;

  FAlgebra algebra_;
  Bimodule module_;
};

/// c(x, y) = c(y, x) on all basis pairs (degree 2).
bool is_symmetric(const Cochain& c);

/// Flattened index of a 1-cochain unknown h(e_i)_r inside C^1.
inline std::size_t c1_index(std::size_t i, std::size_t r, std::size_t module_dim) { return i * module_dim + r; }

}  // namespace hochlift
