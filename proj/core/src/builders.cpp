#include "hochlift/builders.hpp"

#include <algorithm>

namespace hochlift {

std::vector<Monomial> standard_monomials(const std::vector<unsigned>& bounds,
                                         const std::vector<Monomial>& extra_generators) {
  if (bounds.empty()) fail(ErrorKind::DomainError, "need at least one variable");
  for (auto b : bounds)
    if (b == 0) fail(ErrorKind::DomainError, "truncation bound must be positive");
  std::vector<Monomial> out;
  Monomial m(bounds.size(), 0);
  while (true) {
    const bool in_ideal = std::any_of(extra_generators.begin(), extra_generators.end(), [&](const Monomial& g) {
      if (g.size() != m.size()) fail(ErrorKind::DimensionMismatch, "ideal generator has wrong arity");
      for (std::size_t v = 0; v < m.size(); ++v)
        if (m[v] < g[v]) return false;
      return true;
    });
    if (!in_ideal) out.push_back(m);
    std::size_t v = m.size();
    while (v-- > 0) {
      if (++m[v] < bounds[v]) break;
      m[v] = 0;
    }
    if (v == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

RAlgebra twisted_monomial_lift(const TruncRing& ring, const std::vector<Monomial>& monos, const FMatrix& form) {
  const Field& k = ring.residue_field();
  const std::size_t r = monos.front().size();
  if (form.rows() != r || form.cols() != r) fail(ErrorKind::DimensionMismatch, "bilinear form must be r x r");
  return monomial_product_algebra(ring, monos, [&](const Monomial& u, const Monomial& v) {
    FieldElem b = k.zero();
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j)
        b = k.add(b, k.mul(form(i, j), k.mul(k.from_int(u[i]), k.from_int(v[j]))));
    return ring.add(ring.one(), ring.iota(b));
  });
}

LogSymplecticExample log_symplectic_lift(const TruncRing& ring, unsigned nx, unsigned ny) {
  const Field& k = ring.residue_field();
  auto base = truncated_polynomial(k, {nx, ny});
  FMatrix form(k, 2, 2);
  form(0, 1) = k.one();
  auto lift = twisted_monomial_lift(ring, base.monomials, form);
  return {std::move(base), std::move(lift)};
}

FVec restrict_scalars(const Field& big, const Field& prime, const FVec& v) {
  const unsigned m = big.degree();
  FVec out(v.size() * m, prime.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto c = big.coords(v[i]);
    for (unsigned s = 0; s < m; ++s) out[i * m + s] = FieldElem{c[s]};
  }
  return out;
}

FAlgebra restrict_scalars(const FAlgebra& a) {
  const Field& big = a.ring();
  const Field prime = Field::prime(big.characteristic());
  const unsigned m = big.degree();
  const std::size_t d = a.dim() * m;
  std::vector<SparseVec<Field>> products(d * d);
  std::vector<FieldElem> wpow(2 * m);
  wpow[0] = big.one();
  for (unsigned s = 1; s < 2 * m; ++s) wpow[s] = big.mul(wpow[s - 1], m > 1 ? big.generator() : big.one());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (unsigned s = 0; s < m; ++s)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (unsigned t = 0; t < m; ++t) {
          auto& out = products[(i * m + s) * d + (j * m + t)];
          for (const auto& [k, c] : a.product(i, j)) {
            const auto coords = big.coords(big.mul(wpow[s + t], c));
            for (unsigned u = 0; u < m; ++u)
              if (coords[u] != 0) out.emplace_back(k * m + u, FieldElem{coords[u]});
          }
        }
  return FAlgebra(prime, d, std::move(products), restrict_scalars(big, prime, a.unit()));
}

RAlgebra gauge_transform(const RAlgebra& a, const FMatrix& u) {
  const TruncRing& R = a.ring();
  const std::size_t d = a.dim();
  if (u.rows() != d || u.cols() != d) fail(ErrorKind::DimensionMismatch, "gauge matrix must be dim x dim");
  RMatrix g = RMatrix::identity(R, d), ginv = RMatrix::identity(R, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      g(r, c) = R.add(g(r, c), R.iota(u(r, c)));
      ginv(r, c) = R.sub(ginv(r, c), R.iota(u(r, c)));
    }
  std::vector<RVec> images(d);
  for (std::size_t i = 0; i < d; ++i) images[i] = g.column(i);
  std::vector<SparseVec<TruncRing>> products(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto v = ginv.apply(a.multiply(images[i], images[j]));
      for (std::size_t k = 0; k < d; ++k)
        if (!R.is_zero(v[k])) products[i * d + j].emplace_back(k, v[k]);
    }
  return RAlgebra(R, d, std::move(products), ginv.apply(a.unit()));
}

std::optional<FVec> inverse(const FAlgebra& a, const FVec& u) {
  auto right = solve(a.left_multiplication(u), a.unit());  // u v = 1
  if (std::holds_alternative<Infeasible>(right)) return std::nullopt;
  auto v = std::get<FVec>(right);
  if (a.multiply(v, u) != a.unit()) return std::nullopt;
  return v;
}

std::optional<FMatrix> inner_automorphism(const FAlgebra& a, const FVec& u) {
  auto v = inverse(a, u);
  if (!v) return std::nullopt;
  return a.left_multiplication(u).compose(a.right_multiplication(*v));
}

}  // namespace hochlift
