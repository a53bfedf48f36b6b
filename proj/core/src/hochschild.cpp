#include "hochlift/hochschild.hpp"

#include <array>

namespace hochlift {

namespace {

std::size_t checked_power(std::size_t base, unsigned e, std::size_t factor) {
  std::size_t n = factor;
  for (unsigned i = 0; i < e; ++i) {
    if (base != 0 && n > kMaxDenseEntries / base)
      fail(ErrorKind::CapacityExceeded, "cochain space too large for dense storage");
    n *= base;
  }
  return n;
}

std::size_t ipow(std::size_t b, unsigned e) {
  std::size_t n = 1;
  for (unsigned i = 0; i < e; ++i) n *= b;
  return n;
}

}  // namespace

Cochain::Cochain(Field k, unsigned degree, std::size_t source_dim, std::size_t module_dim)
    : k_(std::move(k)), degree_(degree), source_dim_(source_dim), module_dim_(module_dim) {
  if (degree > 3) fail(ErrorKind::DegreeOutOfRange, "cochain degree must be at most 3");
  const std::size_t entries = checked_power(source_dim, degree, module_dim);
  tuples_ = ipow(source_dim, degree);
  data_.assign(entries, k_.zero());
}

std::size_t Cochain::flat(std::span<const std::size_t> idx) const {
  if (idx.size() != degree_) fail(ErrorKind::DimensionMismatch, "index tuple length must equal the degree");
  std::size_t t = 0;
  for (auto i : idx) {
    if (i >= source_dim_) fail(ErrorKind::DimensionMismatch, "basis index out of range");
    t = t * source_dim_ + i;
  }
  return t;
}

std::span<FieldElem> Cochain::at(std::span<const std::size_t> idx) { return at_flat(flat(idx)); }
std::span<const FieldElem> Cochain::at(std::span<const std::size_t> idx) const { return at_flat(flat(idx)); }

bool Cochain::is_zero() const {
  for (auto a : data_)
    if (!k_.is_zero(a)) return false;
  return true;
}

Cochain Cochain::operator+(const Cochain& rhs) const {
  if (rhs.data_.size() != data_.size() || rhs.degree_ != degree_) fail(ErrorKind::DimensionMismatch, "cochain shapes differ");
  Cochain out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = k_.add(data_[i], rhs.data_[i]);
  return out;
}

Cochain Cochain::operator-(const Cochain& rhs) const {
  if (rhs.data_.size() != data_.size() || rhs.degree_ != degree_) fail(ErrorKind::DimensionMismatch, "cochain shapes differ");
  Cochain out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = k_.sub(data_[i], rhs.data_[i]);
  return out;
}

bool is_symmetric(const Cochain& c) {
  if (c.degree() != 2) fail(ErrorKind::DegreeOutOfRange, "symmetry is defined for 2-cochains");
  const std::size_t n = c.source_dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const std::array<std::size_t, 2> ij{i, j}, ji{j, i};
      auto a = c.at(ij);
      auto b = c.at(ji);
      if (!std::equal(a.begin(), a.end(), b.begin())) return false;
    }
  return true;
}

HochschildComplex::HochschildComplex(FAlgebra algebra, Bimodule module)
    : algebra_(std::move(algebra)), module_(std::move(module)) {
  if (module_.source_dim != algebra_.dim() || module_.left.size() != algebra_.dim() ||
      module_.right.size() != algebra_.dim())
    fail(ErrorKind::DimensionMismatch, "bimodule actions do not match the algebra");
}

HochschildComplex HochschildComplex::twisted(const FAlgebra& a, const FMatrix& f) {
  return HochschildComplex(a, TwistedBimodule{a, f}.as_bimodule());
}

Cochain HochschildComplex::zero_cochain(unsigned degree) const {
  return Cochain(field(), degree, algebra_.dim(), module_.dim);
}

std::size_t HochschildComplex::cochain_dim(unsigned degree) const {
  return ipow(algebra_.dim(), degree) * module_.dim;
}

void HochschildComplex::check(const Cochain& c) const {
  if (c.source_dim() != algebra_.dim() || c.module_dim() != module_.dim)
    fail(ErrorKind::DimensionMismatch, "cochain does not belong to this complex");
}

Cochain HochschildComplex::delta(const Cochain& c) const {
  check(c);
  const unsigned n = c.degree();
  if (n > 2) fail(ErrorKind::DegreeOutOfRange, "delta is implemented for degrees 0, 1, 2");
  const Field& k = field();
  const std::size_t d = algebra_.dim(), md = module_.dim;
  Cochain out(k, n + 1, d, md);
  std::vector<std::size_t> idx(n + 1, 0), sub(n, 0);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    {
      std::size_t rem = t;
      for (std::size_t p = n + 1; p-- > 0;) {
        idx[p] = rem % d;
        rem /= d;
      }
    }
    auto dst = out.at_flat(t);
    // a_1 . c(a_2..a_{n+1})
    {
      for (unsigned p = 0; p < n; ++p) sub[p] = idx[p + 1];
      auto src = c.at(sub);
      const FMatrix& L = module_.left[idx[0]];
      for (std::size_t s = 0; s < md; ++s)
        for (std::size_t r = 0; r < md; ++r)
          if (!k.is_zero(src[r])) dst[s] = k.add(dst[s], k.mul(L(s, r), src[r]));
    }
    // sum_{i=1}^{n} (-1)^i c(.., a_i a_{i+1}, ..)
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned p = 0, q = 0; p <= n; ++p) {
        if (p == i) continue;  // positions i-1, i merge into slot i-1
        sub[q++] = idx[p];
      }
      for (const auto& [prod, coef] : algebra_.product(idx[i - 1], idx[i])) {
        sub[i - 1] = prod;
        auto src = c.at(sub);
        const FieldElem w = (i % 2 == 1) ? k.neg(coef) : coef;
        for (std::size_t s = 0; s < md; ++s) dst[s] = k.add(dst[s], k.mul(w, src[s]));
      }
    }
    // (-1)^{n+1} c(a_1..a_n) . a_{n+1}
    {
      for (unsigned p = 0; p < n; ++p) sub[p] = idx[p];
      auto src = c.at(sub);
      const FMatrix& R = module_.right[idx[n]];
      const bool negate = (n + 1) % 2 == 1;
      for (std::size_t s = 0; s < md; ++s) {
        FieldElem acc = k.zero();
        for (std::size_t r = 0; r < md; ++r)
          if (!k.is_zero(src[r])) acc = k.add(acc, k.mul(R(s, r), src[r]));
        dst[s] = negate ? k.sub(dst[s], acc) : k.add(dst[s], acc);
      }
    }
  }
  return out;
}

bool HochschildComplex::is_cocycle(const Cochain& c) const { return delta(c).is_zero(); }

FMatrix HochschildComplex::differential_matrix(unsigned n) const {
  if (n > 2) fail(ErrorKind::DegreeOutOfRange, "delta is implemented for degrees 0, 1, 2");
  const Field& k = field();
  const std::size_t d = algebra_.dim(), md = module_.dim;
  const std::size_t rows = checked_power(d, n + 1, md);
  const std::size_t cols = checked_power(d, n, md);
  if (cols != 0 && rows > kMaxDenseEntries / cols)
    fail(ErrorKind::CapacityExceeded, "differential matrix too large for dense elimination");
  FMatrix m(k, rows, cols);
  std::vector<std::size_t> idx(n + 1, 0);
  auto flat_of = [&](const std::vector<std::size_t>& tuple) {
    std::size_t t = 0;
    for (auto i : tuple) t = t * d + i;
    return t;
  };
  std::vector<std::size_t> sub(n);
  for (std::size_t t = 0; t < ipow(d, n + 1); ++t) {
    std::size_t rem = t;
    for (std::size_t p = n + 1; p-- > 0;) {
      idx[p] = rem % d;
      rem /= d;
    }
    const std::size_t row0 = t * md;
    for (unsigned p = 0; p < n; ++p) sub[p] = idx[p + 1];
    {
      const std::size_t col0 = flat_of(sub) * md;
      const FMatrix& L = module_.left[idx[0]];
      for (std::size_t s = 0; s < md; ++s)
        for (std::size_t r = 0; r < md; ++r) m(row0 + s, col0 + r) = k.add(m(row0 + s, col0 + r), L(s, r));
    }
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned p = 0, q = 0; p <= n; ++p) {
        if (p == i) continue;
        sub[q++] = idx[p];
      }
      for (const auto& [prod, coef] : algebra_.product(idx[i - 1], idx[i])) {
        sub[i - 1] = prod;
        const std::size_t col0 = flat_of(sub) * md;
        const FieldElem w = (i % 2 == 1) ? k.neg(coef) : coef;
        for (std::size_t s = 0; s < md; ++s) m(row0 + s, col0 + s) = k.add(m(row0 + s, col0 + s), w);
      }
    }
    {
      for (unsigned p = 0; p < n; ++p) sub[p] = idx[p];
      const std::size_t col0 = flat_of(sub) * md;
      const FMatrix& R = module_.right[idx[n]];
      const bool negate = (n + 1) % 2 == 1;
      for (std::size_t s = 0; s < md; ++s)
        for (std::size_t r = 0; r < md; ++r)
          m(row0 + s, col0 + r) = negate ? k.sub(m(row0 + s, col0 + r), R(s, r)) : k.add(m(row0 + s, col0 + r), R(s, r));
    }
  }
  return m;
}

OrInfeasible<Cochain> HochschildComplex::coboundary_solve(const Cochain& c) const {
  check(c);
  if (c.degree() != 2) fail(ErrorKind::DegreeOutOfRange, "coboundary_solve expects a 2-cochain");
  if (!is_cocycle(c)) fail(ErrorKind::NotACocycle, "cochain is not closed under delta^2");
  auto sol = solve(differential_matrix(1), c.data());
  if (auto* inf = std::get_if<Infeasible>(&sol)) return *inf;
  Cochain h = zero_cochain(1);
  h.data() = std::move(std::get<FVec>(sol));
  return h;
}

std::size_t HochschildComplex::hh_dim(unsigned n) const {
  if (n > 2) fail(ErrorKind::DegreeOutOfRange, "hh_dim is implemented for n = 0, 1, 2");
  const std::size_t kernel = cochain_dim(n) - rank(differential_matrix(n));
  const std::size_t image = n == 0 ? 0 : rank(differential_matrix(n - 1));
  return kernel - image;
}

FVec HochschildComplex::evaluate(const Cochain& c, const FVec& a, const FVec& b) const {
  check(c);
  if (c.degree() != 2) fail(ErrorKind::DegreeOutOfRange, "expected a 2-cochain");
  const Field& k = field();
  const std::size_t d = algebra_.dim();
  FVec out(module_.dim, k.zero());
  for (std::size_t i = 0; i < d; ++i) {
    if (k.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (k.is_zero(b[j])) continue;
      const FieldElem w = k.mul(a[i], b[j]);
      auto v = c.at_flat(i * d + j);
      for (std::size_t s = 0; s < out.size(); ++s) out[s] = k.add(out[s], k.mul(w, v[s]));
    }
  }
  return out;
}

FVec HochschildComplex::evaluate(const Cochain& c, const FVec& a) const {
  check(c);
  if (c.degree() != 1) fail(ErrorKind::DegreeOutOfRange, "expected a 1-cochain");
  const Field& k = field();
  FVec out(module_.dim, k.zero());
  for (std::size_t i = 0; i < algebra_.dim(); ++i) {
    if (k.is_zero(a[i])) continue;
    auto v = c.at_flat(i);
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = k.add(out[s], k.mul(a[i], v[s]));
  }
  return out;
}

HochschildComplex HochschildComplex::restricted(const Subspace& b) const {
  return HochschildComplex(subalgebra(algebra_, b), restrict_bimodule(module_, b));
}

Cochain HochschildComplex::restrict(const Cochain& c, const Subspace& b) const {
  check(c);
  subalgebra(algebra_, b);  // NotASubalgebra if B is not closed and unital
  const Field& k = field();
  const std::size_t db = b.dim(), d = algebra_.dim(), md = module_.dim;
  const unsigned n = c.degree();
  Cochain out(k, n, db, md);
  std::vector<std::size_t> bidx(n), aidx(n);
  for (std::size_t t = 0; t < out.tuple_count(); ++t) {
    std::size_t rem = t;
    for (std::size_t p = n; p-- > 0;) {
      bidx[p] = rem % db;
      rem /= db;
    }
    auto dst = out.at_flat(t);
    // sum over A-basis tuples of the product of B-basis coordinates
    for (std::size_t s = 0; s < c.tuple_count(); ++s) {
      std::size_t r2 = s;
      FieldElem w = k.one();
      for (std::size_t p = n; p-- > 0;) {
        aidx[p] = r2 % d;
        r2 /= d;
        w = k.mul(w, b.basis(bidx[p])[aidx[p]]);
        if (k.is_zero(w)) break;
      }
      if (k.is_zero(w)) continue;
      auto src = c.at_flat(s);
      for (std::size_t q = 0; q < md; ++q) dst[q] = k.add(dst[q], k.mul(w, src[q]));
    }
  }
  return out;
}

}  // namespace hochlift
