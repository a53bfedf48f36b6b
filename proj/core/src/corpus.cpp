#include "hochlift/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace hochlift {

FieldElem random_element(Rng& rng, const Field& k) {
  if (k.degree() == 1) return k.from_int(static_cast<std::int64_t>(rng.below(k.characteristic())));
  std::vector<std::uint64_t> coords(k.degree());
  for (auto& c : coords) c = rng.below(k.characteristic());
  return k.from_coords(coords);
}

FVec random_vector(Rng& rng, const Field& k, std::size_t n) {
  FVec v(n);
  for (auto& x : v) x = random_element(rng, k);
  return v;
}

FMatrix random_matrix(Rng& rng, const Field& k, std::size_t rows, std::size_t cols) {
  FMatrix m(k, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(rng, k);
  return m;
}

FMatrix random_invertible(Rng& rng, const Field& k, std::size_t n) {
  while (true) {
    auto m = random_matrix(rng, k, n, n);
    if (rank(m) == n) return m;
  }
}

Cochain random_cochain(Rng& rng, const Field& k, unsigned degree, std::size_t source_dim, std::size_t module_dim) {
  Cochain c(k, degree, source_dim, module_dim);
  for (auto& x : c.data()) x = random_element(rng, k);
  return c;
}

namespace {

FVec mat_vec(const Field& k, std::size_t n, const std::vector<std::vector<std::int64_t>>& rows) {
  FVec v(n * n, k.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) v[a * n + b] = k.from_int(rows[a][b]);
  return v;
}

FMatrix conjugation(const FAlgebra& a, const FVec& u) {
  auto f = inner_automorphism(a, u);
  if (!f) fail(ErrorKind::DomainError, "conjugating element is not invertible");
  return *f;
}

FMatrix permutation_matrix(const Field& k, const std::vector<std::size_t>& image) {
  FMatrix m(k, image.size(), image.size());
  for (std::size_t c = 0; c < image.size(); ++c) m(image[c], c) = k.one();
  return m;
}

FMatrix fixed_gauge(const Field& k, std::size_t d) {
  FMatrix u(k, d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) u(r, c) = k.from_int(static_cast<std::int64_t>((r * 7 + c * 3 + 1) % 5));
  return u;
}

// A random algebra map of a truncated monomial algebra sending each variable
// into the maximal ideal; identity when none is found quickly.
FMatrix random_monomial_endo(Rng& rng, const MonomialAlgebra<Field>& a) {
  const Field& k = a.algebra.ring();
  const std::size_t vars = a.monomials.front().size();
  for (int attempt = 0; attempt < 20; ++attempt) {
    std::vector<FVec> images;
    for (std::size_t v = 0; v < vars; ++v) {
      FVec img = random_vector(rng, k, a.algebra.dim());
      img[*a.index_of(Monomial(vars, 0))] = k.zero();
      images.push_back(std::move(img));
    }
    auto f = monomial_substitution(a, images);
    if (is_algebra_morphism(a.algebra, f)) return f;
  }
  return FMatrix::identity(k, a.algebra.dim());
}

}  // namespace

FlatLift mat2_f3_lift() {
  const auto R = TruncRing::zp_squared(3);
  return FlatLift(matrix_algebra(R.residue_field(), 2), matrix_algebra(R, 2));
}

FMatrix mat2_f3_conjugation() {
  const auto k = Field::prime(3);
  return conjugation(matrix_algebra(k, 2), mat_vec(k, 2, {{1, 1}, {0, 1}}));
}

MonomialAlgebra<Field> logsymp_5_2_3_base() { return truncated_polynomial(Field::prime(5), {2, 3}); }

FlatLift logsymp_5_2_3() {
  auto ex = log_symplectic_lift(TruncRing::zp_squared(5), 2, 3);
  return FlatLift(ex.base.algebra, ex.lift);
}

FMatrix y_to_ysq() {
  const auto a = logsymp_5_2_3_base();
  const auto& alg = a.algebra;
  const auto x = alg.basis(a.variable(0)), y = alg.basis(a.variable(1));
  return monomial_substitution(a, {x, alg.multiply(y, y)});
}

FAlgebra f4_times_mat2f4() {
  const auto f4 = Field::extension(2, {1, 1, 1});
  const FAlgebra scalars(f4, 1, {SparseVec<Field>{{0, f4.one()}}}, FVec{f4.one()});
  return restrict_scalars(direct_product(scalars, matrix_algebra(f4, 2)));
}

FMatrix f4_diag_frobenius() {
  // Basis over F_2: w^s e_i at index 2i + s; e_0 = (1, 0), e_1..e_4 = (0, E_11..E_22).
  const auto k = Field::prime(2);
  FMatrix f(k, 10, 10);
  const std::size_t e11 = 1, e22 = 4;
  // a = 1: (1, diag(1, 1)); a = w: (w, diag(w, w^2)) with w^2 = w + 1
  f(0, 0) = f(2 * e11, 0) = f(2 * e22, 0) = k.one();
  f(1, 1) = f(2 * e11 + 1, 1) = k.one();
  f(2 * e22, 1) = f(2 * e22 + 1, 1) = k.one();
  return f;
}

WeylEndo p2_weyl_example() {
  WeylEndo f;
  f.images_x = {WeylElem::x(1, 2, false, 0)};
  f.images_d = {WeylElem::d(1, 2, false, 0) + WeylElem::monomial(2, false, {3}, {4}, 1)};
  return f;
}

std::vector<NamedLift> lift_corpus() {
  std::vector<NamedLift> out;
  {
    auto l = mat2_f3_lift();
    const auto& a = l.base();
    const auto k = a.ring();
    out.push_back({"mat2_f3", l,
                   {{"identity", FMatrix::identity(k, 4)},
                    {"conj", mat2_f3_conjugation()},
                    {"conj_2", conjugation(a, mat_vec(k, 2, {{0, 1}, {1, 1}}))}},
                   true});
    FlatLift g(a, gauge_transform(l.lift(), fixed_gauge(k, 4)));
    out.push_back({"mat2_f3_gauge", g, {{"identity", FMatrix::identity(k, 4)}, {"conj", mat2_f3_conjugation()}}, true});
  }
  {
    const auto R = TruncRing::zp_squared(2);
    const auto k = R.residue_field();
    const auto a = matrix_algebra(k, 3);
    out.push_back({"mat3_f2",
                   FlatLift(a, matrix_algebra(R, 3)),
                   {{"identity", FMatrix::identity(k, 9)},
                    {"conj", conjugation(a, mat_vec(k, 3, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}))},
                    {"conj_perm", conjugation(a, mat_vec(k, 3, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}))}},
                   true});
  }
  {
    const auto k = Field::extension(2, {1, 1, 1});
    const auto R = TruncRing::dual(k);
    const auto a = matrix_algebra(k, 2);
    FVec u(4, k.zero());
    u[0] = u[3] = k.one();
    u[1] = k.generator();
    FlatLift l(a, gauge_transform(matrix_algebra(R, 2), fixed_gauge(k, 4)));
    out.push_back({"mat2_f4_dual", l, {{"identity", FMatrix::identity(k, 4)}, {"conj", conjugation(a, u)}}, true});
  }
  {
    const auto R = TruncRing::zp_squared(3);
    const auto k = R.residue_field();
    const auto poly = truncated_polynomial(k, {2});
    const auto poly_r = truncated_polynomial(R, {2});
    const auto a = tensor_product(matrix_algebra(k, 2), poly.algebra);
    const auto x = poly.algebra.basis(poly.variable(0));
    const auto kill_x = monomial_substitution(poly, {poly.algebra.zero_vector()});
    const auto scale_x = monomial_substitution(poly, {vec_scale(k, k.from_int(2), x)});
    const auto conj = mat2_f3_conjugation();
    out.push_back({"mat2_dualnum_f3",
                   FlatLift(a, tensor_product(matrix_algebra(R, 2), poly_r.algebra)),
                   {{"identity", FMatrix::identity(k, 8)},
                    {"conj_x_id", kronecker(conj, FMatrix::identity(k, 2))},
                    {"id_x_kill", kronecker(FMatrix::identity(k, 4), kill_x)},
                    {"conj_x_scale", kronecker(conj, scale_x)}},
                   true});
  }
  {
    const auto a = logsymp_5_2_3_base();
    const auto& alg = a.algebra;
    const auto k = alg.ring();
    const auto x = alg.basis(a.variable(0)), y = alg.basis(a.variable(1));
    out.push_back({"logsymp_5_2_3",
                   logsymp_5_2_3(),
                   {{"identity", FMatrix::identity(k, alg.dim())},
                    {"y_to_ysq", y_to_ysq()},
                    {"scale_x", monomial_substitution(a, {vec_scale(k, k.from_int(2), x), y})}},
                   true});
  }
  {
    const auto R = TruncRing::zp_squared(3);
    const auto k = R.residue_field();
    const auto a = truncated_polynomial(k, {3, 2});
    FMatrix form(k, 2, 2);
    form(0, 1) = k.one();
    form(1, 0) = k.from_int(2);
    const auto& alg = a.algebra;
    const auto x = alg.basis(a.variable(0)), y = alg.basis(a.variable(1));
    out.push_back({"twisted_f3_3_2",
                   FlatLift(alg, twisted_monomial_lift(R, a.monomials, form)),
                   {{"identity", FMatrix::identity(k, alg.dim())},
                    {"x_to_x_plus_y", monomial_substitution(a, {vec_add(k, x, y), y})},
                    {"y_to_xy", monomial_substitution(a, {x, alg.multiply(x, y)})}},
                   true});
  }
  {
    const auto R = TruncRing::zp_squared(2);
    const auto k = R.residue_field();
    out.push_back({"cyclic4_f2",
                   FlatLift(cyclic_group_algebra(k, 4), cyclic_group_algebra(R, 4)),
                   {{"identity", FMatrix::identity(k, 4)},
                    {"g_to_g3", permutation_matrix(k, {0, 3, 2, 1})},
                    {"g_to_g2", permutation_matrix(k, {0, 2, 0, 2})}},
                   true});
  }
  {
    const auto R = TruncRing::zp_squared(3);
    const auto k = R.residue_field();
    const auto a = upper_triangular(k, 2);
    FVec u(3, k.one());  // [[1,1],[0,1]]
    out.push_back({"upper2_f3",
                   FlatLift(a, upper_triangular(R, 2)),
                   {{"identity", FMatrix::identity(k, 3)}, {"conj", conjugation(a, u)}},
                   false});
  }
  return out;
}

std::vector<NamedAlgebra> center_corpus() {
  std::vector<NamedAlgebra> out;
  for (const auto& nl : lift_corpus()) {
    if (nl.name != "mat2_f3" && nl.name != "mat3_f2") continue;
    NamedAlgebra na{nl.name, nl.lift.base(), nl.morphisms};
    out.push_back(std::move(na));
  }
  {
    const auto k = Field::prime(3);
    const auto a = matrix_algebra(k, 2);
    Rng rng(2024);
    for (int t = 0; t < 4; ++t) {
      FVec u;
      do u = random_vector(rng, k, 4);
      while (!inverse(a, u));
      out.front().morphisms.push_back({"conj_random_" + std::to_string(t), conjugation(a, u)});
    }
  }
  const auto a = f4_times_mat2f4();
  out.push_back({"f4_times_mat2f4",
                 a,
                 {{"identity", FMatrix::identity(a.ring(), a.dim())}, {"diag_frobenius", f4_diag_frobenius()}}});
  return out;
}

RandomLiftCase random_lift_case(Rng& rng, std::uint64_t p, std::size_t max_dim) {
  const auto R = rng.below(4) == 0 ? TruncRing::dual(Field::prime(p)) : TruncRing::zp_squared(p);
  const auto k = R.residue_field();
  auto maybe_gauge = [&](const RAlgebra& lift) {
    return rng.coin() ? gauge_transform(lift, random_matrix(rng, k, lift.dim(), lift.dim())) : lift;
  };
  auto random_inner = [&](const FAlgebra& a) {
    while (true) {
      auto u = random_vector(rng, k, a.dim());
      if (auto f = inner_automorphism(a, u)) return *f;
    }
  };
  std::vector<std::string> families{"twisted_monomial", "cyclic", "upper_triangular", "product"};
  if (max_dim >= 4) families.push_back("mat2");
  const auto family = rng.pick(families);

  if (family == "mat2") {
    const auto a = matrix_algebra(k, 2);
    return {family, FlatLift(a, maybe_gauge(matrix_algebra(R, 2))), random_inner(a)};
  }
  if (family == "upper_triangular") {
    const auto a = upper_triangular(k, 2);
    return {family, FlatLift(a, maybe_gauge(upper_triangular(R, 2))), random_inner(a)};
  }
  if (family == "cyclic") {
    const std::size_t n = 2 + rng.below(std::max<std::size_t>(max_dim, 2) - 1);
    const std::size_t power = rng.below(n);
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = (i * power) % n;
    return {family, FlatLift(cyclic_group_algebra(k, n), maybe_gauge(cyclic_group_algebra(R, n))),
            permutation_matrix(k, image)};
  }
  if (family == "product") {
    const auto a = truncated_polynomial(k, {2});
    FMatrix form(k, 1, 1);
    form(0, 0) = random_element(rng, k);
    const auto lift1 = twisted_monomial_lift(R, a.monomials, form);
    const auto base = direct_product(a.algebra, a.algebra);
    const auto lift = direct_product(lift1, lift1);
    const auto f = rng.coin() ? permutation_matrix(k, {2, 3, 0, 1})
                              : block_diagonal(random_monomial_endo(rng, a), random_monomial_endo(rng, a));
    return {family, FlatLift(base, maybe_gauge(lift)), f};
  }
  std::vector<std::vector<unsigned>> shapes;
  for (const auto& s : std::vector<std::vector<unsigned>>{{2}, {3}, {4}, {5}, {6}, {2, 2}, {2, 3}, {3, 2}})
    if (std::size_t(std::accumulate(s.begin(), s.end(), 1U, std::multiplies<>())) <= max_dim) shapes.push_back(s);
  const auto& bounds = rng.pick(shapes);
  const auto a = truncated_polynomial(k, bounds);
  const auto form = random_matrix(rng, k, bounds.size(), bounds.size());
  return {family, FlatLift(a.algebra, maybe_gauge(twisted_monomial_lift(R, a.monomials, form))),
          random_monomial_endo(rng, a)};
}

RMatrix random_linear_lift(Rng& rng, const FlatLift& l, const FMatrix& f) {
  const auto noise = random_matrix(rng, l.field(), f.rows(), f.cols());
  const auto& R = l.ring();
  RMatrix ft = section(R, f);
  for (std::size_t r = 0; r < f.rows(); ++r)
    for (std::size_t c = 0; c < f.cols(); ++c) ft(r, c) = R.add(ft(r, c), R.iota(noise(r, c)));
  return ft;
}

RandomExtensionCase random_extension_case(Rng& rng, std::uint64_t p) {
  const auto k = Field::prime(p);
  const std::vector<std::string> families{"noise", "coboundary", "twist_cocycle", "symmetric_noise", "symmetric_cocycle"};
  const auto family = rng.pick(families);
  const bool monomial = family == "twist_cocycle" || family == "symmetric_cocycle" || rng.coin();

  std::optional<MonomialAlgebra<Field>> mono;
  FAlgebra z = cyclic_group_algebra(k, 1);
  if (monomial) {
    mono = truncated_polynomial(k, rng.pick(std::vector<std::vector<unsigned>>{{2}, {3}, {4}, {2, 2}}));
    z = mono->algebra;
  } else if (rng.coin()) {
    z = cyclic_group_algebra(k, 2 + rng.below(3));
  } else {
    const auto one = cyclic_group_algebra(k, 1);
    z = direct_product(one, direct_product(one, one));
  }
  const std::size_t d = z.dim();
  const bool twisted = !monomial && rng.coin();
  FMatrix f = FMatrix::identity(k, d);
  if (twisted && d == 3 && z.unit() == FVec(3, k.one())) f = permutation_matrix(k, {1, 2, 0});
  const auto m = TwistedBimodule{z, f}.as_bimodule();
  const HochschildComplex complex(z, m);

  Cochain phi(k, 2, d, d);
  if (family == "noise") {
    phi = random_cochain(rng, k, 2, d, d);
  } else if (family == "symmetric_noise") {
    phi = random_cochain(rng, k, 2, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < i; ++j) {
        auto src = phi.at_flat(j * d + i);
        std::copy(src.begin(), src.end(), phi.at_flat(i * d + j).begin());
      }
  } else {
    if (mono) {
      // c(x^u, x^v) = B(u, v) x^(u+v): the eps-part of a twisted monomial product.
      const std::size_t r = mono->monomials.front().size();
      auto form = random_matrix(rng, k, r, r);
      if (family == "symmetric_cocycle")
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < i; ++j) form(i, j) = form(j, i);
      if (family != "coboundary")
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j) {
            const auto& u = mono->monomials[i];
            const auto& v = mono->monomials[j];
            Monomial s(r);
            for (std::size_t t = 0; t < r; ++t) s[t] = u[t] + v[t];
            const auto target = mono->index_of(s);
            if (!target) continue;
            FieldElem b = k.zero();
            for (std::size_t t1 = 0; t1 < r; ++t1)
              for (std::size_t t2 = 0; t2 < r; ++t2)
                b = k.add(b, k.mul(form(t1, t2), k.mul(k.from_int(u[t1]), k.from_int(v[t2]))));
            phi.at_flat(i * d + j)[*target] = b;
          }
    }
    phi = phi + complex.delta(random_cochain(rng, k, 1, d, d));
  }
  return {family, z, m, phi};
}

WeylElem random_weyl(Rng& rng, unsigned n, std::uint64_t p, bool lifted, std::uint32_t max_degree, std::size_t terms) {
  WeylElem w(n, p, lifted);
  for (std::size_t t = 0; t < terms; ++t) {
    WeylMonomial m(2 * n, 0);
    std::uint32_t budget = static_cast<std::uint32_t>(rng.below(max_degree + 1));
    for (std::uint32_t s = 0; s < budget; ++s) ++m[rng.below(2 * n)];
    w.add_term_mod(m, rng.below(w.modulus()));
  }
  return w;
}

}  // namespace hochlift
