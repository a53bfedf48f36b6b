#include "hochlift/linalg.hpp"

namespace hochlift {

namespace {

// In-place Gauss-Jordan on the first `ncols` columns of `m`.
std::vector<std::size_t> eliminate(FMatrix& m, std::size_t ncols) {
  const Field& k = m.ring();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && k.is_zero(m(sel, c))) ++sel;
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(r, j));
    FieldElem* prow = m.row_ptr(r);
    const FieldElem scale = k.inv(prow[c]);
    for (std::size_t j = c; j < cols; ++j) prow[j] = k.mul(prow[j], scale);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      FieldElem* row = m.row_ptr(i);
      const FieldElem factor = row[c];
      if (k.is_zero(factor)) continue;
      for (std::size_t j = c; j < cols; ++j)
        if (!k.is_zero(prow[j])) row[j] = k.sub(row[j], k.mul(factor, prow[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref(FMatrix m) {
  auto pivots = eliminate(m, m.cols());
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const FMatrix& m) { return rref(m).rank(); }

OrInfeasible<FVec> solve(const FMatrix& m, const FVec& b) {
  if (b.size() != m.rows()) fail(ErrorKind::DimensionMismatch, "right-hand side length must equal the row count");
  const Field& k = m.ring();
  const std::size_t n = m.cols();
  FMatrix aug(k, m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const FieldElem* src = m.row_ptr(r);
    FieldElem* dst = aug.row_ptr(r);
    std::copy(src, src + n, dst);
    dst[n] = b[r];
  }
  const auto pivots = eliminate(aug, n);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (!k.is_zero(aug(r, n))) return Infeasible{r};
  FVec x(n, k.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, n);
  return x;
}

std::vector<FVec> kernel_basis(const FMatrix& m) {
  const Field& k = m.ring();
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<FVec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    FVec v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < red.pivots.size(); ++i) v[red.pivots[i]] = k.neg(red.matrix(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

Subspace Subspace::span(const Field& k, std::size_t ambient, const std::vector<FVec>& vectors) {
  Subspace s(k, ambient);
  FMatrix m(k, vectors.size(), ambient);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != ambient) fail(ErrorKind::DimensionMismatch, "spanning vector has wrong length");
    for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
  }
  auto red = rref(std::move(m));
  s.pivots_ = red.pivots;
  for (std::size_t r = 0; r < red.rank(); ++r) {
    const FieldElem* row = red.matrix.row_ptr(r);
    s.basis_.emplace_back(row, row + ambient);
  }
  return s;
}

Subspace Subspace::whole(const Field& k, std::size_t ambient) {
  std::vector<FVec> vs;
  for (std::size_t i = 0; i < ambient; ++i) vs.push_back(unit_vector(k, ambient, i));
  return span(k, ambient, vs);
}

std::optional<FVec> Subspace::coordinates(const FVec& v) const {
  if (v.size() != ambient_) fail(ErrorKind::DimensionMismatch, "vector does not live in the ambient space");
  FVec coords(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coords[i] = v[pivots_[i]];
  if (embed(coords) != v) return std::nullopt;
  return coords;
}

FVec Subspace::embed(const FVec& coords) const {
  if (coords.size() != basis_.size()) fail(ErrorKind::DimensionMismatch, "coordinate vector has wrong length");
  FVec out(ambient_, k_.zero());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (k_.is_zero(coords[i])) continue;
    for (std::size_t j = 0; j < ambient_; ++j) out[j] = k_.add(out[j], k_.mul(coords[i], basis_[i][j]));
  }
  return out;
}

}  // namespace hochlift
