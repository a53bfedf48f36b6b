#pragma once

// First-order flat lifts, the bracket they induce on the center, and the
// Hochschild obstruction to lifting an endomorphism.

#include <optional>
#include <variant>
#include <vector>

#include "hochlift/algebra.hpp"
#include "hochlift/hochschild.hpp"

namespace hochlift {

/// Basis-aligned flat lift: A~ over R has the same basis as A and reduces to
/// it coefficientwise. A~ is free on the lifted basis, hence flat.
class FlatLift {
 public:
  /// Validates the alignment; NotALift or NotAssociative otherwise.
  FlatLift(FAlgebra base, RAlgebra lift);

  const FAlgebra& base() const noexcept { return base_; }
  const RAlgebra& lift() const noexcept { return lift_; }
  const TruncRing& ring() const noexcept { return lift_.ring(); }
  const Field& field() const noexcept { return base_.ring(); }
  const Subspace& center() const noexcept { return center_; }
  std::size_t dim() const noexcept { return base_.dim(); }

  RVec lift_vector(const FVec& v) const { return section(ring(), v); }

 private:
  FAlgebra base_;
  RAlgebra lift_;
  Subspace center_;
};

/// {z, w} = p^{-1}[z~, w~]. NotCentral unless both arguments are central.
FVec poisson_bracket(const FlatLift& l, const FVec& z, const FVec& w);

struct PoissonCenter {
  Subspace center;
  /// table[i][j] = {z_i, z_j} as a vector of A.
  std::vector<std::vector<FVec>> table;
};

PoissonCenter poisson_center(const FlatLift& l);

struct PoissonAxioms {
  bool antisymmetric = true;
  bool jacobi = true;
  bool leibniz = true;
  bool closed = true;  // brackets land in the center
  bool all() const noexcept { return antisymmetric && jacobi && leibniz && closed; }
};

PoissonAxioms check_poisson_axioms(const FlatLift& l);

/// R-linear lift f~ of f. NotALinearLift unless reduce(f~) == f.
void check_linear_lift(const FlatLift& l, const FMatrix& f, const RMatrix& ft);

/// Entrywise canonical section of f.
RMatrix default_linear_lift(const FlatLift& l, const FMatrix& f);

/// C(e_i, e_j) = p^{-1}( f~(e_i) f~(e_j) - f~(e_i e_j) ) in C^2(A/k, A_f).
Cochain defect_cocycle(const FlatLift& l, const FMatrix& f, const RMatrix& ft);

/// The 1-cochain h with f~2 - f~1 = iota o h o pi.
Cochain lift_difference(const FlatLift& l, const RMatrix& ft1, const RMatrix& ft2);

/// True iff ft(e_i) ft(e_j) = ft(e_i e_j) on all basis pairs and ft(1) = 1.
bool is_multiplicative_lift(const FlatLift& l, const RMatrix& ft);

struct MultiplicativeLift {
  RMatrix matrix;
  Cochain correction;  // h with C = delta(h); f^ = f~ - iota o h o pi
};

struct Obstruction {
  Cochain cocycle;
  std::size_t inconsistent_row;
};

using LiftDecision = std::variant<MultiplicativeLift, Obstruction>;

/// Decides whether f lifts to an R-algebra endomorphism of A~. On success the
/// corrected lift is re-verified by multiplication over R.
LiftDecision decide_lift(const FlatLift& l, const FMatrix& f);
LiftDecision decide_lift(const FlatLift& l, const FMatrix& f, const RMatrix& ft);

struct AntisymEntry {
  std::size_t i = 0, j = 0;  // center-basis indices
  FVec lhs;                  // c(x, y) - c(y, x)
  FVec rhs;                  // {f x, f y} - f{x, y}
};

struct AntisymReport {
  std::vector<AntisymEntry> entries;  // all pairs i < j
  bool identity_holds = true;         // lhs == rhs everywhere
  bool restricted_symmetric = true;   // lhs == 0 everywhere
  bool bracket_preserved = true;      // rhs == 0 everywhere
};

/// Compares both sides of c(x,y) - c(y,x) = {f x, f y} - f{x,y} on the center.
/// CenterNotPreserved unless f(Z) is contained in Z.
AntisymReport antisym_check(const FlatLift& l, const FMatrix& f);
AntisymReport antisym_check(const FlatLift& l, const FMatrix& f, const RMatrix& ft);

/// E = Z (+) M with (a, m)(b, n) = (ab, a.n + m.b + phi(a, b)). Basis: Z then M.
/// The unit is (1, -phi(1, 1)), which is two-sided whenever phi is a cocycle.
FAlgebra build_square_zero_extension(const FAlgebra& z, const Bimodule& m, const Cochain& phi);

/// Solves phi = delta(h) for a symmetric cocycle over a commutative algebra
/// with diagonal coefficients; eta = -h then satisfies
/// phi(a, b) = eta(ab) - a eta(b) - eta(a) b.
OrInfeasible<Cochain> symmetric_coboundary_check(const FAlgebra& z, const Bimodule& m, const Cochain& phi);

}  // namespace hochlift
