#include "hochlift/algebra.hpp"

namespace hochlift {

template class Algebra<Field>;
template class Algebra<TruncRing>;

template <CoefficientRing Ring>
bool is_associative(const Algebra<Ring>& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const auto left = a.multiply(ij, a.basis(k));
        const auto right = a.multiply(a.basis(i), a.basis_product(j, k));
        if (left != right) return false;
      }
    }
  return true;
}

template <CoefficientRing Ring>
AlgebraReport validate(const Algebra<Ring>& a) {
  AlgebraReport r;
  r.associative = is_associative(a);
  r.unital = true;
  r.commutative = true;
  for (std::size_t i = 0; i < a.dim() && r.unital; ++i) {
    const auto e = a.basis(i);
    r.unital = a.multiply(a.unit(), e) == e && a.multiply(e, a.unit()) == e;
  }
  for (std::size_t i = 0; i < a.dim() && r.commutative; ++i)
    for (std::size_t j = i + 1; j < a.dim() && r.commutative; ++j)
      r.commutative = a.basis_product(i, j) == a.basis_product(j, i);
  return r;
}

template <CoefficientRing Ring>
bool is_algebra_morphism(const Algebra<Ring>& a, const Matrix<Ring>& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim()) fail(ErrorKind::DimensionMismatch, "endomorphism matrix must be dim x dim");
  if (f.apply(a.unit()) != a.unit()) return false;
  std::vector<Vec<Ring>> images(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) images[i] = f.column(i);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (f.apply(a.basis_product(i, j)) != a.multiply(images[i], images[j])) return false;
  return true;
}

template AlgebraReport validate(const Algebra<Field>&);
template AlgebraReport validate(const Algebra<TruncRing>&);
template bool is_associative(const Algebra<Field>&);
template bool is_associative(const Algebra<TruncRing>&);
template bool is_algebra_morphism(const Algebra<Field>&, const Matrix<Field>&);
template bool is_algebra_morphism(const Algebra<TruncRing>&, const Matrix<TruncRing>&);

Subspace center(const FAlgebra& a) {
  const Field& k = a.ring();
  const std::size_t n = a.dim();
  FMatrix m(k, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < n; ++c) {
      // column c, block i: e_c e_i - e_i e_c
      const auto d = vec_sub(k, a.basis_product(c, i), a.basis_product(i, c));
      for (std::size_t r = 0; r < n; ++r) m(i * n + r, c) = d[r];
    }
  return Subspace::span(k, n, kernel_basis(m));
}

FAlgebra subalgebra(const FAlgebra& a, const Subspace& b) {
  if (b.ambient() != a.dim()) fail(ErrorKind::DimensionMismatch, "subspace does not live in the algebra");
  const Field& k = a.ring();
  const std::size_t d = b.dim();
  if (d == 0) fail(ErrorKind::NotASubalgebra, "empty subspace");
  auto unit = b.coordinates(a.unit());
  if (!unit) fail(ErrorKind::NotASubalgebra, "subspace does not contain the unit");
  std::vector<SparseVec<Field>> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto coords = b.coordinates(a.multiply(b.basis(i), b.basis(j)));
      if (!coords) fail(ErrorKind::NotASubalgebra, "subspace is not closed under multiplication");
      for (std::size_t t = 0; t < d; ++t)
        if (!k.is_zero((*coords)[t])) products[i * d + j].emplace_back(t, (*coords)[t]);
    }
  return FAlgebra(k, d, std::move(products), std::move(*unit));
}

std::variant<FMatrix, NotPreserved> restrict_endo(const FMatrix& f, const Subspace& b) {
  if (f.cols() != b.ambient() || f.rows() != b.ambient()) fail(ErrorKind::DimensionMismatch, "endomorphism and subspace sizes differ");
  FMatrix out(b.field(), b.dim(), b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    auto coords = b.coordinates(f.apply(b.basis(i)));
    if (!coords) return NotPreserved{b.basis(i)};
    out.set_column(i, *coords);
  }
  return out;
}

FAlgebra reduce_algebra(const RAlgebra& a) {
  const TruncRing& R = a.ring();
  std::vector<SparseVec<Field>> products(a.dim() * a.dim());
  for (std::size_t i = 0; i < products.size(); ++i)
    for (const auto& [k, c] : a.products()[i]) products[i].emplace_back(k, R.reduce(c));
  return FAlgebra(R.residue_field(), a.dim(), std::move(products), reduce(R, a.unit()));
}

FMatrix Bimodule::left_action(const FVec& a) const {
  FMatrix out(field, dim, dim);
  for (std::size_t i = 0; i < source_dim; ++i)
    if (!field.is_zero(a[i])) {
      FMatrix scaled = left[i];
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) scaled(r, c) = field.mul(a[i], scaled(r, c));
      out = out + scaled;
    }
  return out;
}

FMatrix Bimodule::right_action(const FVec& a) const {
  FMatrix out(field, dim, dim);
  for (std::size_t i = 0; i < source_dim; ++i)
    if (!field.is_zero(a[i])) {
      FMatrix scaled = right[i];
      for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) scaled(r, c) = field.mul(a[i], scaled(r, c));
      out = out + scaled;
    }
  return out;
}

Bimodule TwistedBimodule::as_bimodule() const {
  const std::size_t n = carrier.dim();
  if (twist.rows() != n || twist.cols() != n) fail(ErrorKind::DimensionMismatch, "twist must be dim x dim");
  Bimodule m{carrier.ring(), n, n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const auto fi = twist.column(i);
    m.left.push_back(carrier.left_multiplication(fi));
    m.right.push_back(carrier.right_multiplication(fi));
  }
  return m;
}

Bimodule restrict_bimodule(const Bimodule& m, const Subspace& b) {
  if (b.ambient() != m.source_dim) fail(ErrorKind::DimensionMismatch, "subspace does not live in the source algebra");
  Bimodule out{m.field, b.dim(), m.dim, {}, {}};
  for (const auto& v : b.basis()) {
    out.left.push_back(m.left_action(v));
    out.right.push_back(m.right_action(v));
  }
  return out;
}

bool is_b_diagonal(const Bimodule& m, const Subspace& b) {
  for (const auto& v : b.basis())
    if (!(m.left_action(v) == m.right_action(v))) return false;
  return true;
}

bool is_b_diagonal(const TwistedBimodule& m, const Subspace& b) { return is_b_diagonal(m.as_bimodule(), b); }

bool satisfies_bimodule_axioms(const FAlgebra& a, const Bimodule& m) {
  const Field& k = a.ring();
  if (!(m.left_action(a.unit()) == FMatrix::identity(k, m.dim))) return false;
  if (!(m.right_action(a.unit()) == FMatrix::identity(k, m.dim))) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const auto ij = a.basis_product(i, j);
      if (!(m.left_action(ij) == m.left[i].compose(m.left[j]))) return false;
      if (!(m.right_action(ij) == m.right[j].compose(m.right[i]))) return false;
      if (!(m.right[j].compose(m.left[i]) == m.left[i].compose(m.right[j]))) return false;
    }
  return true;
}

}  // namespace hochlift
