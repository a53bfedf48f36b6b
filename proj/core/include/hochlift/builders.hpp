#pragma once

// Builders for the standard algebra families and their first-order lifts.

#include <map>
#include <optional>
#include <vector>

#include "hochlift/algebra.hpp"

namespace hochlift {

/// Mat_n(ring) on matrix units; basis index of E_ab is a*n + b.
template <CoefficientRing Ring>
Algebra<Ring> matrix_algebra(const Ring& ring, std::size_t n) {
  const std::size_t d = n * n;
  std::vector<SparseVec<Ring>> products(d * d);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)  // E_ab E_bc = E_ac
        products[(a * n + b) * d + (b * n + c)].emplace_back(a * n + c, ring.one());
  Vec<Ring> unit(d, ring.zero());
  for (std::size_t a = 0; a < n; ++a) unit[a * n + a] = ring.one();
  return Algebra<Ring>(ring, d, std::move(products), std::move(unit));
}

/// Upper triangular n x n matrices on the units E_ab, a <= b, in row order.
template <CoefficientRing Ring>
Algebra<Ring> upper_triangular(const Ring& ring, std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      index[{a, b}] = units.size();
      units.emplace_back(a, b);
    }
  const std::size_t d = units.size();
  std::vector<SparseVec<Ring>> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (units[i].second == units[j].first)
        products[i * d + j].emplace_back(index[{units[i].first, units[j].second}], ring.one());
  Vec<Ring> unit(d, ring.zero());
  for (std::size_t a = 0; a < n; ++a) unit[index[{a, a}]] = ring.one();
  return Algebra<Ring>(ring, d, std::move(products), std::move(unit));
}

using Monomial = std::vector<unsigned>;

/// Commutative monomial algebra ring[x_1..x_r]/(x_i^{bounds_i}, extra generators).
/// Basis: standard monomials in lexicographic exponent order.
template <CoefficientRing Ring>
struct MonomialAlgebra {
  Algebra<Ring> algebra;
  std::vector<Monomial> monomials;

  std::optional<std::size_t> index_of(const Monomial& m) const {
    for (std::size_t i = 0; i < monomials.size(); ++i)
      if (monomials[i] == m) return i;
    return std::nullopt;
  }
  std::size_t variable(std::size_t v) const {
    Monomial m(monomials.front().size(), 0);
    m[v] = 1;
    auto idx = index_of(m);
    if (!idx) fail(ErrorKind::DomainError, "variable vanishes in this truncation");
    return *idx;
  }
};

std::vector<Monomial> standard_monomials(const std::vector<unsigned>& bounds,
                                         const std::vector<Monomial>& extra_generators);

/// Product of basis monomials u, v with coefficient weight(u, v); zero if the
/// product leaves the standard set.
template <CoefficientRing Ring, class Weight>
Algebra<Ring> monomial_product_algebra(const Ring& ring, const std::vector<Monomial>& monos, Weight weight) {
  const std::size_t d = monos.size();
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < d; ++i) index[monos[i]] = i;
  std::vector<SparseVec<Ring>> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Monomial s(monos[i].size());
      for (std::size_t v = 0; v < s.size(); ++v) s[v] = monos[i][v] + monos[j][v];
      auto it = index.find(s);
      if (it != index.end()) products[i * d + j].emplace_back(it->second, weight(monos[i], monos[j]));
    }
  Vec<Ring> unit(d, ring.zero());
  unit[index.at(Monomial(monos.front().size(), 0))] = ring.one();
  return Algebra<Ring>(ring, d, std::move(products), std::move(unit));
}

template <CoefficientRing Ring>
MonomialAlgebra<Ring> truncated_polynomial(const Ring& ring, const std::vector<unsigned>& bounds,
                                           const std::vector<Monomial>& extra_generators = {}) {
  auto monos = standard_monomials(bounds, extra_generators);
  auto alg = monomial_product_algebra(ring, monos, [&](const Monomial&, const Monomial&) { return ring.one(); });
  return {std::move(alg), std::move(monos)};
}

/// Lift of a monomial algebra over R with x^u * x^v = (1 + eps*B(u, v)) x^{u+v},
/// B the bilinear form on exponent vectors with Gram matrix `form` over k.
/// Associative for every form; the induced bracket is {x^u, x^v} = (B(u,v) - B(v,u)) x^{u+v}.
RAlgebra twisted_monomial_lift(const TruncRing& ring, const std::vector<Monomial>& monos, const FMatrix& form);

/// The log-symplectic lift of F_q[x,y]/(x^nx, y^ny): a*b = ab + eps*xy*d_x(a)*d_y(b),
/// whose commutator is eps*xy*(d_x a d_y b - d_y a d_x b), so {x, y} = xy.
struct LogSymplecticExample {
  MonomialAlgebra<Field> base;
  RAlgebra lift;
};
LogSymplecticExample log_symplectic_lift(const TruncRing& ring, unsigned nx, unsigned ny);

/// Group algebra of the cyclic group of order n; basis g^0..g^{n-1}.
template <CoefficientRing Ring>
Algebra<Ring> cyclic_group_algebra(const Ring& ring, std::size_t n) {
  std::vector<SparseVec<Ring>> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) products[i * n + j].emplace_back((i + j) % n, ring.one());
  return Algebra<Ring>(ring, n, std::move(products), unit_vector(ring, n, 0));
}

/// A x B with the basis of A followed by the basis of B.
template <CoefficientRing Ring>
Algebra<Ring> direct_product(const Algebra<Ring>& a, const Algebra<Ring>& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<SparseVec<Ring>> products(d * d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) products[i * d + j] = a.product(i, j);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (const auto& [k, c] : b.product(i, j)) products[(da + i) * d + da + j].emplace_back(da + k, c);
  Vec<Ring> unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra<Ring>(a.ring(), d, std::move(products), std::move(unit));
}

/// A (x) B with basis index i * dim(B) + j for e_i (x) f_j.
template <CoefficientRing Ring>
Algebra<Ring> tensor_product(const Algebra<Ring>& a, const Algebra<Ring>& b) {
  const Ring& ring = a.ring();
  const std::size_t da = a.dim(), db = b.dim(), d = da * db;
  std::vector<SparseVec<Ring>> products(d * d);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < db; ++j1)
      for (std::size_t i2 = 0; i2 < da; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2) {
          auto& out = products[(i1 * db + j1) * d + (i2 * db + j2)];
          for (const auto& [ka, ca] : a.product(i1, i2))
            for (const auto& [kb, cb] : b.product(j1, j2)) out.emplace_back(ka * db + kb, ring.mul(ca, cb));
        }
  Vec<Ring> unit(d, ring.zero());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) unit[i * db + j] = ring.mul(a.unit()[i], b.unit()[j]);
  return Algebra<Ring>(ring, d, std::move(products), std::move(unit));
}

/// Block-diagonal map f x g on A x B.
template <CoefficientRing Ring>
Matrix<Ring> block_diagonal(const Matrix<Ring>& f, const Matrix<Ring>& g) {
  Matrix<Ring> out(f.ring(), f.rows() + g.rows(), f.cols() + g.cols());
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) out(r, c) = f(r, c);
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < g.cols(); ++c) out(f.rows() + r, f.cols() + c) = g(r, c);
  return out;
}

/// Kronecker product f (x) g, matching tensor_product's basis order.
template <CoefficientRing Ring>
Matrix<Ring> kronecker(const Matrix<Ring>& f, const Matrix<Ring>& g) {
  const Ring& ring = f.ring();
  Matrix<Ring> out(ring, f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t r1 = 0; r1 < f.rows(); ++r1)
    for (std::size_t c1 = 0; c1 < f.cols(); ++c1)
      for (std::size_t r2 = 0; r2 < g.rows(); ++r2)
        for (std::size_t c2 = 0; c2 < g.cols(); ++c2)
          out(r1 * g.rows() + r2, c1 * g.cols() + c2) = ring.mul(f(r1, c1), g(r2, c2));
  return out;
}

/// View an algebra over F_{p^m} as an algebra over F_p; basis w^s e_i at index i*m + s.
FAlgebra restrict_scalars(const FAlgebra& a);

/// Expand a vector over F_{p^m} into F_p-coordinates matching restrict_scalars.
FVec restrict_scalars(const Field& big, const Field& prime, const FVec& v);

/// Transport of structure along g = 1 + eps*U: e_i * e_j := g^{-1}(g(e_i) g(e_j)).
/// The result is again a flat lift of the same reduction.
RAlgebra gauge_transform(const RAlgebra& a, const FMatrix& u);

/// Algebra map of a monomial algebra determined by the images of the variables
/// (f(x^a) = prod images^a). The caller checks is_algebra_morphism.
template <CoefficientRing Ring>
Matrix<Ring> monomial_substitution(const MonomialAlgebra<Ring>& a, const std::vector<Vec<Ring>>& images) {
  const auto& alg = a.algebra;
  Matrix<Ring> f(alg.ring(), alg.dim(), alg.dim());
  for (std::size_t i = 0; i < a.monomials.size(); ++i) {
    Vec<Ring> img = alg.unit();
    for (std::size_t v = 0; v < images.size(); ++v) img = alg.multiply(img, alg.power(images[v], a.monomials[i][v]));
    f.set_column(i, img);
  }
  return f;
}

/// Conjugation a |-> u a u^{-1}; nullopt if u is not invertible.
std::optional<FMatrix> inner_automorphism(const FAlgebra& a, const FVec& u);

/// Two-sided inverse of u, if any.
std::optional<FVec> inverse(const FAlgebra& a, const FVec& u);

}  // namespace hochlift
