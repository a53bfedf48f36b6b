#pragma once

// Dense exact linear algebra over F_{p^m}.

#include <optional>
#include <variant>
#include <vector>

#include "hochlift/matrix.hpp"

namespace hochlift {

struct RrefResult {
  FMatrix matrix;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank() const noexcept { return pivots.size(); }
};

RrefResult rref(FMatrix m);
std::size_t rank(const FMatrix& m);

/// Certificate that M x = b has no solution: the row of the augmented RREF
/// whose only nonzero entry is in the right-hand-side column.
struct Infeasible {
  std::size_t inconsistent_row;
};

template <class T>
using OrInfeasible = std::variant<T, Infeasible>;

/// One solution of M x = b with all free variables set to zero.
OrInfeasible<FVec> solve(const FMatrix& m, const FVec& b);

/// Basis of {v : M v = 0}; one vector per free column, in column order.
std::vector<FVec> kernel_basis(const FMatrix& m);

/// Finite-dimensional subspace kept as an RREF basis, so that membership
/// and coordinates are read off at the pivot positions.
class Subspace {
 public:
  static Subspace span(const Field& k, std::size_t ambient, const std::vector<FVec>& vectors);
  static Subspace whole(const Field& k, std::size_t ambient);

  const Field& field() const noexcept { return k_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<FVec>& basis() const noexcept { return basis_; }
  const FVec& basis(std::size_t i) const { return basis_.at(i); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Coordinates of v in the basis, or nullopt if v is not in the span.
  std::optional<FVec> coordinates(const FVec& v) const;
  bool contains(const FVec& v) const { return coordinates(v).has_value(); }
  FVec embed(const FVec& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Field k, std::size_t ambient) : k_(std::move(k)), ambient_(ambient) {}

  Field k_;
  std::size_t ambient_;
  std::vector<FVec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hochlift
