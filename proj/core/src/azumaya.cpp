#include "hochlift/azumaya.hpp"

namespace hochlift {

namespace {

// e_i (x) e_j with the product vectors expanded on one side.
void add_tensor(const Field& k, FVec& out, std::size_t d, const FVec& left, std::size_t right_basis, FieldElem w) {
  for (std::size_t s = 0; s < d; ++s)
    if (!k.is_zero(left[s])) out[s * d + right_basis] = k.add(out[s * d + right_basis], k.mul(w, left[s]));
}

void add_tensor(const Field& k, FVec& out, std::size_t d, std::size_t left_basis, const FVec& right, FieldElem w) {
  for (std::size_t s = 0; s < d; ++s)
    if (!k.is_zero(right[s])) out[left_basis * d + s] = k.add(out[left_basis * d + s], k.mul(w, right[s]));
}

}  // namespace

EnvelopeOverCenter::EnvelopeOverCenter(const FAlgebra& a, const Subspace& z)
    : a_(a), relations_{FMatrix(a.ring(), 0, 0), {}} {
  const Field& k = a.ring();
  const std::size_t d = a.dim(), dd = d * d;
  if (z.ambient() != d) fail(ErrorKind::DimensionMismatch, "center subspace does not live in A");
  FMatrix rel(k, z.dim() * dd, dd);
  std::size_t row = 0;
  for (const auto& zv : z.basis())
    for (std::size_t i = 0; i < d; ++i) {
      const auto zi = a.multiply(zv, a.basis(i));
      for (std::size_t j = 0; j < d; ++j, ++row) {
        const auto zj = a.multiply(zv, a.basis(j));
        FVec v(dd, k.zero());
        add_tensor(k, v, d, zi, j, k.one());
        add_tensor(k, v, d, i, zj, k.neg(k.one()));
        for (std::size_t c = 0; c < dd; ++c) rel(row, c) = v[c];
      }
    }
  relations_ = rref(std::move(rel));
  std::vector<bool> pivot(dd, false);
  for (auto p : relations_.pivots) pivot[p] = true;
  for (std::size_t c = 0; c < dd; ++c)
    if (!pivot[c]) quotient_basis_.push_back(c);
}

FVec EnvelopeOverCenter::reduce(FVec v) const {
  const Field& k = a_.ring();
  for (std::size_t r = 0; r < relations_.rank(); ++r) {
    const FieldElem w = v[relations_.pivots[r]];
    if (k.is_zero(w)) continue;
    const FieldElem* row = relations_.matrix.row_ptr(r);
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!k.is_zero(row[c])) v[c] = k.sub(v[c], k.mul(w, row[c]));
  }
  FVec out(quotient_basis_.size());
  for (std::size_t t = 0; t < quotient_basis_.size(); ++t) out[t] = v[quotient_basis_[t]];
  return out;
}

FVec EnvelopeOverCenter::mu(const FVec& coords) const {
  const Field& k = a_.ring();
  const std::size_t d = a_.dim();
  FVec out = a_.zero_vector();
  for (std::size_t t = 0; t < quotient_basis_.size(); ++t) {
    if (k.is_zero(coords[t])) continue;
    const auto prod = a_.basis_product(quotient_basis_[t] / d, quotient_basis_[t] % d);
    out = vec_add(k, out, vec_scale(k, coords[t], prod));
  }
  return out;
}

namespace {

// Column t: the A (x) A vector (e_k (x) 1) t - t (1 (x) e_k) for basis tensor t.
FVec commutator_tensor(const FAlgebra& a, std::size_t k_basis, std::size_t left, std::size_t right) {
  const Field& k = a.ring();
  const std::size_t d = a.dim();
  FVec v(d * d, k.zero());
  add_tensor(k, v, d, a.basis_product(k_basis, left), right, k.one());
  add_tensor(k, v, d, left, a.basis_product(right, k_basis), k.neg(k.one()));
  return v;
}

}  // namespace

SeparabilityResult separability_element(const FAlgebra& a, const Subspace& z) {
  const Field& k = a.ring();
  const std::size_t d = a.dim();
  const EnvelopeOverCenter env(a, z);
  const std::size_t q = env.dim();
  FMatrix m(k, d + d * q, q);
  for (std::size_t t = 0; t < q; ++t) {
    const std::size_t i = env.quotient_basis()[t] / d, j = env.quotient_basis()[t] % d;
    const auto prod = a.basis_product(i, j);
    for (std::size_t r = 0; r < d; ++r) m(r, t) = prod[r];
    for (std::size_t kb = 0; kb < d; ++kb) {
      const auto red = env.reduce(commutator_tensor(a, kb, i, j));
      for (std::size_t r = 0; r < q; ++r) m(d + kb * q + r, t) = red[r];
    }
  }
  FVec rhs(m.rows(), k.zero());
  for (std::size_t r = 0; r < d; ++r) rhs[r] = a.unit()[r];
  SeparabilityResult res;
  res.envelope_dim = q;
  auto sol = solve(m, rhs);
  if (auto* inf = std::get_if<Infeasible>(&sol)) {
    res.inconsistent_row = inf->inconsistent_row;
    return res;
  }
  SeparabilityElement e;
  e.coords = std::get<FVec>(std::move(sol));
  for (std::size_t t = 0; t < q; ++t)
    if (!k.is_zero(e.coords[t]))
      e.terms.push_back({env.quotient_basis()[t] / d, env.quotient_basis()[t] % d, e.coords[t]});
  res.element = std::move(e);
  return res;
}

bool is_separability_element(const FAlgebra& a, const Subspace& z, const SeparabilityElement& e) {
  const Field& k = a.ring();
  const std::size_t d = a.dim();
  const EnvelopeOverCenter env(a, z);
  FVec mu = a.zero_vector();
  for (const auto& t : e.terms) mu = vec_add(k, mu, vec_scale(k, t.coeff, a.basis_product(t.left, t.right)));
  if (mu != a.unit()) return false;
  for (std::size_t kb = 0; kb < d; ++kb) {
    FVec v(d * d, k.zero());
    for (const auto& t : e.terms) v = vec_add(k, v, vec_scale(k, t.coeff, commutator_tensor(a, kb, t.left, t.right)));
    if (!vec_is_zero(k, env.reduce(v))) return false;
  }
  return true;
}

Subspace bimodule_invariants(const Bimodule& m) {
  const Field& k = m.field;
  FMatrix stacked(k, m.source_dim * m.dim, m.dim);
  for (std::size_t i = 0; i < m.source_dim; ++i) {
    const FMatrix diff = m.left[i] - m.right[i];
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) stacked(i * m.dim + r, c) = diff(r, c);
  }
  return Subspace::span(k, m.dim, kernel_basis(stacked));
}

ProjectionReport e_m_projection(const FAlgebra& a, const Subspace& z, const SeparabilityElement& e, const Bimodule& m) {
  const Field& k = a.ring();
  if (m.source_dim != a.dim()) fail(ErrorKind::DimensionMismatch, "bimodule is not over A");
  if (!is_b_diagonal(m, z)) fail(ErrorKind::NotDiagonal, "e_M needs a Z-diagonal bimodule");
  ProjectionReport rep{FMatrix(k, m.dim, m.dim)};
  for (const auto& t : e.terms) {
    FMatrix term = m.left[t.left].compose(m.right[t.right]);
    for (std::size_t r = 0; r < m.dim; ++r)
      for (std::size_t c = 0; c < m.dim; ++c) term(r, c) = k.mul(t.coeff, term(r, c));
    rep.projection = rep.projection + term;
  }
  const FMatrix& p = rep.projection;
  rep.idempotent = p.compose(p) == p;
  rep.z_linear = true;
  for (const auto& zv : z.basis())
    if (!(p.compose(m.left_action(zv)) == m.left_action(zv).compose(p))) rep.z_linear = false;
  std::vector<FVec> cols;
  for (std::size_t c = 0; c < m.dim; ++c) cols.push_back(p.column(c));
  const auto image = Subspace::span(k, m.dim, cols);
  const auto inv = bimodule_invariants(m);
  rep.image_dim = image.dim();
  rep.invariants_dim = inv.dim();
  rep.image_is_invariants = image == inv;
  return rep;
}

CenterPreservation center_preserved(const FAlgebra& a, const FMatrix& f) {
  if (!is_algebra_morphism(a, f)) fail(ErrorKind::NotARingMorphism, "map is not a unital ring endomorphism");
  CenterPreservation out;
  const auto z = center(a);
  auto r = restrict_endo(f, z);
  if (auto* np = std::get_if<NotPreserved>(&r)) {
    out.preserved = false;
    out.witness = np->witness;
    out.image = f.apply(np->witness);
  }
  return out;
}

std::optional<std::vector<BlockRank>> central_block_ranks(const FAlgebra& a) {
  const Field& k = a.ring();
  if (k.order() > 4096) return std::nullopt;
  const auto zsub = center(a);
  const auto zalg = subalgebra(a, zsub);
  const std::size_t dz = zalg.dim();
  // Frobenius z |-> z^q is k-linear on the commutative center; its fixed points
  // form a split semisimple subalgebra whose primitive idempotents are the blocks.
  FMatrix frob(k, dz, dz);
  for (std::size_t i = 0; i < dz; ++i) {
    const auto img = vec_sub(k, zalg.power(zalg.basis(i), k.order()), zalg.basis(i));
    frob.set_column(i, img);
  }
  const auto fixed = kernel_basis(frob);
  std::vector<FVec> idempotents{zalg.unit()};
  for (const auto& s : fixed) {
    std::vector<FVec> refined;
    for (const auto& e : idempotents) {
      const auto se = zalg.multiply(s, e);
      for (const auto lambda : k.elements()) {
        // e * (1 - (s - lambda)^{q-1}) picks the blocks of e on which s = lambda
        const auto shifted = vec_sub(k, se, vec_scale(k, lambda, e));
        const auto pw = zalg.multiply(e, zalg.power(shifted, k.order() - 1));
        const auto piece = vec_sub(k, e, pw);
        if (!vec_is_zero(k, piece)) refined.push_back(piece);
      }
    }
    idempotents = std::move(refined);
  }
  std::vector<BlockRank> blocks;
  for (const auto& ez : idempotents) {
    const auto e = zsub.embed(ez);
    std::vector<FVec> span_a, span_z;
    for (std::size_t i = 0; i < a.dim(); ++i) span_a.push_back(a.multiply(e, a.basis(i)));
    for (const auto& zb : zsub.basis()) span_z.push_back(a.multiply(e, zb));
    blocks.push_back({Subspace::span(k, a.dim(), span_a).dim(), Subspace::span(k, a.dim(), span_z).dim()});
  }
  return blocks;
}

AzumayaReport azumaya_check(const FAlgebra& a) {
  AzumayaReport rep;
  const auto z = center(a);
  rep.center_dim = z.dim();
  rep.separable_over_center = separability_element(a, z).element.has_value();
  rep.blocks = central_block_ranks(a);
  if (rep.blocks) {
    bool constant = true;
    const auto& b = *rep.blocks;
    for (const auto& blk : b)
      if (blk.algebra_dim * b.front().center_dim != b.front().algebra_dim * blk.center_dim) constant = false;
    rep.constant_rank = constant;
  }
  return rep;
}

InjectivityProbe restriction_injectivity_probe(const FlatLift& l, const FMatrix& f) {
  const Subspace& z = l.center();
  if (!separability_element(l.base(), z).element)
    fail(ErrorKind::NotSeparable, "A has no separability element over its center");
  if (std::holds_alternative<NotPreserved>(restrict_endo(f, z)))
    fail(ErrorKind::CenterNotPreserved, "f does not map the center into itself");
  const auto c = defect_cocycle(l, f, default_linear_lift(l, f));
  const auto complex = HochschildComplex::twisted(l.base(), f);
  const auto restricted = complex.restricted(z);
  const auto cz = complex.restrict(c, z);
  InjectivityProbe probe;
  probe.restricted_solvable = std::holds_alternative<Cochain>(restricted.coboundary_solve(cz));
  probe.global_solvable = std::holds_alternative<Cochain>(complex.coboundary_solve(c));
  probe.consistent = !probe.restricted_solvable || probe.global_solvable;
  return probe;
}

}  // namespace hochlift
