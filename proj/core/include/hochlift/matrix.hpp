#pragma once

#include <cstddef>
#include <vector>

#include "hochlift/coeff.hpp"

namespace hochlift {

template <CoefficientRing Ring>
using Vec = std::vector<typename Ring::value_type>;

/// Dense row-major matrix over a coefficient ring. As a linear map the
/// convention is column j = image of basis vector e_j.
template <CoefficientRing Ring>
class Matrix {
 public:
  using Scalar = typename Ring::value_type;

  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), data_(rows * cols, ring_.zero()) {}

  static Matrix identity(const Ring& ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
    return m;
  }

  static Matrix from_columns(const Ring& ring, std::size_t rows, const std::vector<Vec<Ring>>& columns) {
    Matrix m(ring, rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
  }

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Scalar* row_ptr(std::size_t r) { return data_.data() + r * cols_; }
  const Scalar* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }

  Vec<Ring> column(std::size_t c) const {
    Vec<Ring> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vec<Ring>& v) {
    if (v.size() != rows_) fail(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Vec<Ring> apply(const Vec<Ring>& v) const {
    if (v.size() != cols_) fail(ErrorKind::DimensionMismatch, "matrix/vector size mismatch");
    Vec<Ring> out(rows_, ring_.zero());
    for (std::size_t c = 0; c < cols_; ++c) {
      if (ring_.is_zero(v[c])) continue;
      for (std::size_t r = 0; r < rows_; ++r) {
        const Scalar& a = (*this)(r, c);
        if (!ring_.is_zero(a)) out[r] = ring_.add(out[r], ring_.mul(a, v[c]));
      }
    }
    return out;
  }

  /// this * rhs (apply rhs first).
  Matrix compose(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) fail(ErrorKind::DimensionMismatch, "matrix product size mismatch");
    Matrix out(ring_, rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Scalar& a = (*this)(r, k);
        if (ring_.is_zero(a)) continue;
        for (std::size_t c = 0; c < rhs.cols_; ++c)
          out(r, c) = ring_.add(out(r, c), ring_.mul(a, rhs(k, c)));
      }
    return out;
  }

  Matrix operator+(const Matrix& rhs) const { return combine(rhs, false); }
  Matrix operator-(const Matrix& rhs) const { return combine(rhs, true); }

  bool is_zero() const {
    for (const auto& a : data_)
      if (!ring_.is_zero(a)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  const std::vector<Scalar>& data() const noexcept { return data_; }

 private:
  Matrix combine(const Matrix& rhs, bool subtract) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum size mismatch");
    Matrix out(ring_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = subtract ? ring_.sub(data_[i], rhs.data_[i]) : ring_.add(data_[i], rhs.data_[i]);
    return out;
  }

  Ring ring_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// Small vector helpers shared by every module.
template <CoefficientRing Ring>
Vec<Ring> vec_add(const Ring& r, const Vec<Ring>& a, const Vec<Ring>& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
  Vec<Ring> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.add(a[i], b[i]);
  return out;
}

template <CoefficientRing Ring>
Vec<Ring> vec_sub(const Ring& r, const Vec<Ring>& a, const Vec<Ring>& b) {
  if (a.size() != b.size()) fail(ErrorKind::DimensionMismatch, "vector length mismatch");
  Vec<Ring> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.sub(a[i], b[i]);
  return out;
}

template <CoefficientRing Ring>
Vec<Ring> vec_scale(const Ring& r, typename Ring::value_type s, const Vec<Ring>& a) {
  Vec<Ring> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = r.mul(s, a[i]);
  return out;
}

template <CoefficientRing Ring>
bool vec_is_zero(const Ring& r, const Vec<Ring>& a) {
  for (const auto& x : a)
    if (!r.is_zero(x)) return false;
  return true;
}

template <CoefficientRing Ring>
Vec<Ring> unit_vector(const Ring& r, std::size_t n, std::size_t i) {
  Vec<Ring> v(n, r.zero());
  v[i] = r.one();
  return v;
}

using FVec = Vec<Field>;
using RVec = Vec<TruncRing>;
using FMatrix = Matrix<Field>;
using RMatrix = Matrix<TruncRing>;

/// Coefficientwise reduction R -> k.
FVec reduce(const TruncRing& R, const RVec& v);
FMatrix reduce(const TruncRing& R, const RMatrix& m);
/// Coefficientwise canonical section k -> R.
RVec section(const TruncRing& R, const FVec& v);
RMatrix section(const TruncRing& R, const FMatrix& m);
/// Coefficientwise iota: k -> eps*R.
RVec iota(const TruncRing& R, const FVec& v);
/// Coefficientwise p^{-1}; DomainError if some entry is not eps-divisible.
FVec pinv(const TruncRing& R, const RVec& v);

}  // namespace hochlift
