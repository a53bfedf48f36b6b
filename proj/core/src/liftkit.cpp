#include "hochlift/liftkit.hpp"

#include <array>

namespace hochlift {

FlatLift::FlatLift(FAlgebra base, RAlgebra lift)
    : base_(std::move(base)), lift_(std::move(lift)), center_(Subspace::whole(base_.ring(), 0)) {
  if (!(lift_.ring().residue_field() == base_.ring()))
    fail(ErrorKind::NotALift, "residue field of the lift differs from the base field");
  if (lift_.dim() != base_.dim()) fail(ErrorKind::NotALift, "lift and base have different dimensions");
  if (!(reduce(lift_.ring(), lift_.unit()) == base_.unit())) fail(ErrorKind::NotALift, "unit does not reduce to the base unit");
  const auto reduced = reduce_algebra(lift_);
  for (std::size_t i = 0; i < base_.dim(); ++i)
    for (std::size_t j = 0; j < base_.dim(); ++j)
      if (reduced.basis_product(i, j) != base_.basis_product(i, j))
        fail(ErrorKind::NotALift, "structure constant (" + std::to_string(i) + ", " + std::to_string(j) +
                                      ") does not reduce to the base");
  const auto report = validate(lift_);
  if (!report.associative) fail(ErrorKind::NotAssociative, "lifted algebra is not associative over R");
  if (!report.unital) fail(ErrorKind::NotAssociative, "lifted algebra is not unital over R");
  center_ = hochlift::center(base_);
}

FVec poisson_bracket(const FlatLift& l, const FVec& z, const FVec& w) {
  if (!l.center().contains(z) || !l.center().contains(w)) fail(ErrorKind::NotCentral, "bracket arguments must be central");
  const auto c = l.lift().commutator(l.lift_vector(z), l.lift_vector(w));
  auto out = pinv(l.ring(), c);
  if (!l.center().contains(out)) fail(ErrorKind::NotCentral, "bracket left the center");
  return out;
}

PoissonCenter poisson_center(const FlatLift& l) {
  PoissonCenter pc{l.center(), {}};
  const std::size_t n = l.center().dim();
  pc.table.assign(n, std::vector<FVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pc.table[i][j] = poisson_bracket(l, l.center().basis(i), l.center().basis(j));
  return pc;
}

PoissonAxioms check_poisson_axioms(const FlatLift& l) {
  PoissonAxioms ax;
  const Field& k = l.field();
  const Subspace& z = l.center();
  const std::size_t n = z.dim();
  const FAlgebra& a = l.base();
  std::vector<std::vector<FVec>> table(n, std::vector<FVec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto c = l.lift().commutator(l.lift_vector(z.basis(i)), l.lift_vector(z.basis(j)));
      table[i][j] = pinv(l.ring(), c);
      if (!z.contains(table[i][j])) ax.closed = false;
    }
  if (!ax.closed) return ax;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] != vec_scale(k, k.neg(k.one()), table[j][i])) ax.antisymmetric = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t t = 0; t < n; ++t) {
        const auto& x = z.basis(i);
        const auto& y = z.basis(j);
        const auto& w = z.basis(t);
        auto jac = poisson_bracket(l, x, table[j][t]);
        jac = vec_add(k, jac, poisson_bracket(l, y, table[t][i]));
        jac = vec_add(k, jac, poisson_bracket(l, w, table[i][j]));
        if (!vec_is_zero(k, jac)) ax.jacobi = false;
        // {x, y w} = {x, y} w + y {x, w}
        const auto lhs = poisson_bracket(l, x, a.multiply(y, w));
        const auto rhs = vec_add(k, a.multiply(table[i][j], w), a.multiply(y, table[i][t]));
        if (lhs != rhs) ax.leibniz = false;
      }
  return ax;
}

void check_linear_lift(const FlatLift& l, const FMatrix& f, const RMatrix& ft) {
  if (ft.rows() != l.dim() || ft.cols() != l.dim()) fail(ErrorKind::NotALinearLift, "linear lift has the wrong shape");
  if (!(reduce(l.ring(), ft) == f)) fail(ErrorKind::NotALinearLift, "linear lift does not reduce to f");
}

RMatrix default_linear_lift(const FlatLift& l, const FMatrix& f) { return section(l.ring(), f); }

Cochain defect_cocycle(const FlatLift& l, const FMatrix& f, const RMatrix& ft) {
  if (f.rows() != l.dim() || f.cols() != l.dim()) fail(ErrorKind::DimensionMismatch, "f must be dim x dim");
  if (!is_algebra_morphism(l.base(), f)) fail(ErrorKind::NotAMorphism, "f is not a k-algebra endomorphism");
  check_linear_lift(l, f, ft);
  const std::size_t d = l.dim();
  const RAlgebra& at = l.lift();
  std::vector<RVec> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = ft.column(i);
  Cochain c(l.field(), 2, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto defect = vec_sub(l.ring(), at.multiply(images[i], images[j]), ft.apply(at.basis_product(i, j)));
      const auto v = pinv(l.ring(), defect);
      std::copy(v.begin(), v.end(), c.at_flat(i * d + j).begin());
    }
  return c;
}

Cochain lift_difference(const FlatLift& l, const RMatrix& ft1, const RMatrix& ft2) {
  const std::size_t d = l.dim();
  Cochain h(l.field(), 1, d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const auto v = pinv(l.ring(), vec_sub(l.ring(), ft2.column(i), ft1.column(i)));
    std::copy(v.begin(), v.end(), h.at_flat(i).begin());
  }
  return h;
}

bool is_multiplicative_lift(const FlatLift& l, const RMatrix& ft) { return is_algebra_morphism(l.lift(), ft); }

LiftDecision decide_lift(const FlatLift& l, const FMatrix& f) { return decide_lift(l, f, default_linear_lift(l, f)); }

LiftDecision decide_lift(const FlatLift& l, const FMatrix& f, const RMatrix& ft) {
  auto c = defect_cocycle(l, f, ft);
  const auto complex = HochschildComplex::twisted(l.base(), f);
  auto sol = complex.coboundary_solve(c);
  if (auto* inf = std::get_if<Infeasible>(&sol)) return Obstruction{std::move(c), inf->inconsistent_row};
  auto h = std::get<Cochain>(std::move(sol));
  RMatrix fhat = ft;
  for (std::size_t j = 0; j < l.dim(); ++j) {
    auto hj = h.at_flat(j);
    for (std::size_t r = 0; r < l.dim(); ++r) fhat(r, j) = l.ring().sub(fhat(r, j), l.ring().iota(hj[r]));
  }
  if (!is_multiplicative_lift(l, fhat))
    fail(ErrorKind::DomainError, "corrected lift failed re-verification over R");
  return MultiplicativeLift{std::move(fhat), std::move(h)};
}

AntisymReport antisym_check(const FlatLift& l, const FMatrix& f) {
  return antisym_check(l, f, default_linear_lift(l, f));
}

AntisymReport antisym_check(const FlatLift& l, const FMatrix& f, const RMatrix& ft) {
  const Field& k = l.field();
  const Subspace& z = l.center();
  if (std::holds_alternative<NotPreserved>(restrict_endo(f, z)))
    fail(ErrorKind::CenterNotPreserved, "f does not map the center into itself");
  const auto c = defect_cocycle(l, f, ft);
  const auto complex = HochschildComplex::twisted(l.base(), f);
  AntisymReport rep;
  for (std::size_t i = 0; i < z.dim(); ++i)
    for (std::size_t j = i + 1; j < z.dim(); ++j) {
      const auto& x = z.basis(i);
      const auto& y = z.basis(j);
      AntisymEntry e{i, j, {}, {}};
      e.lhs = vec_sub(k, complex.evaluate(c, x, y), complex.evaluate(c, y, x));
      e.rhs = vec_sub(k, poisson_bracket(l, f.apply(x), f.apply(y)), f.apply(poisson_bracket(l, x, y)));
      if (e.lhs != e.rhs) rep.identity_holds = false;
      if (!vec_is_zero(k, e.lhs)) rep.restricted_symmetric = false;
      if (!vec_is_zero(k, e.rhs)) rep.bracket_preserved = false;
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

FAlgebra build_square_zero_extension(const FAlgebra& z, const Bimodule& m, const Cochain& phi) {
  const Field& k = z.ring();
  if (!validate(z).commutative) fail(ErrorKind::NotCommutative, "square-zero extensions need a commutative base");
  if (m.source_dim != z.dim()) fail(ErrorKind::DimensionMismatch, "bimodule is not over this algebra");
  if (!is_b_diagonal(m, Subspace::whole(k, z.dim()))) fail(ErrorKind::NotDiagonal, "coefficient bimodule is not diagonal");
  if (phi.degree() != 2 || phi.source_dim() != z.dim() || phi.module_dim() != m.dim)
    fail(ErrorKind::DimensionMismatch, "phi must be a 2-cochain on Z with values in M");
  const std::size_t dz = z.dim(), dm = m.dim, d = dz + dm;
  std::vector<SparseVec<Field>> products(d * d);
  for (std::size_t i = 0; i < dz; ++i)
    for (std::size_t j = 0; j < dz; ++j) {
      auto& out = products[i * d + j];
      out = z.product(i, j);
      auto v = phi.at_flat(i * dz + j);
      for (std::size_t s = 0; s < dm; ++s)
        if (!k.is_zero(v[s])) out.emplace_back(dz + s, v[s]);
    }
  for (std::size_t i = 0; i < dz; ++i)
    for (std::size_t r = 0; r < dm; ++r) {
      auto& zm = products[i * d + dz + r];
      auto& mz = products[(dz + r) * d + i];
      for (std::size_t s = 0; s < dm; ++s) {
        if (!k.is_zero(m.left[i](s, r))) zm.emplace_back(dz + s, m.left[i](s, r));
        if (!k.is_zero(m.right[i](s, r))) mz.emplace_back(dz + s, m.right[i](s, r));
      }
    }
  const auto complex = HochschildComplex(z, m);
  const auto phi11 = complex.evaluate(phi, z.unit(), z.unit());
  FVec unit = z.unit();
  for (auto v : phi11) unit.push_back(k.neg(v));
  return FAlgebra(k, d, std::move(products), std::move(unit));
}

OrInfeasible<Cochain> symmetric_coboundary_check(const FAlgebra& z, const Bimodule& m, const Cochain& phi) {
  return HochschildComplex(z, m).coboundary_solve(phi);
}

}  // namespace hochlift
