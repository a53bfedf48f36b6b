#include "hochlift/matrix.hpp"

namespace hochlift {

FVec reduce(const TruncRing& R, const RVec& v) {
  FVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.reduce(v[i]);
  return out;
}

FMatrix reduce(const TruncRing& R, const RMatrix& m) {
  FMatrix out(R.residue_field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = R.reduce(m(r, c));
  return out;
}

RVec section(const TruncRing& R, const FVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.section(v[i]);
  return out;
}

RMatrix section(const TruncRing& R, const FMatrix& m) {
  RMatrix out(R, m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = R.section(m(r, c));
  return out;
}

RVec iota(const TruncRing& R, const FVec& v) {
  RVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.iota(v[i]);
  return out;
}

FVec pinv(const TruncRing& R, const RVec& v) {
  FVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = R.pinv(v[i]);
  return out;
}

}  // namespace hochlift
