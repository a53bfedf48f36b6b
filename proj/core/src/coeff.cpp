#include "hochlift/coeff.hpp"

#include <sstream>
#include <utility>

namespace hochlift {

namespace {

constexpr std::uint64_t kMaxPrime = (std::uint64_t{1} << 31) - 1;

// Polynomial remainder over F_p, coefficients low-to-high; divisor monic.
std::vector<std::uint64_t> poly_rem(std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b,
                                    std::uint64_t p) {
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    if (lead != 0) {
      for (std::size_t i = 0; i <= db; ++i) {
        a[shift + i] = (a[shift + i] + (p - (lead * b[i]) % p)) % p;
      }
    }
    a.pop_back();
  }
  return a;
}

bool all_zero(const std::vector<std::uint64_t>& v) {
  for (auto c : v)
    if (c != 0) return false;
  return true;
}

// Exhaustive search for a monic factor of degree d.
bool has_monic_factor(const std::vector<std::uint64_t>& g, unsigned d, std::uint64_t p) {
  std::vector<std::uint64_t> cand(d + 1, 0);
  cand[d] = 1;
  while (true) {
    if (all_zero(poly_rem(g, cand, p))) return true;
    unsigned i = 0;
    while (i < d) {
      if (++cand[i] < p) break;
      cand[i] = 0;
      ++i;
    }
    if (i == d) return false;
  }
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : p_(p), m_(static_cast<unsigned>(modulus.size() - 1)), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
}

Field Field::prime(std::uint64_t p) {
  if (p > kMaxPrime || !is_prime(p)) fail(ErrorKind::DomainError, "characteristic " + std::to_string(p) + " is not a supported prime");
  return Field(p, {0, 1});
}

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  if (p > kMaxPrime || !is_prime(p)) fail(ErrorKind::DomainError, "characteristic " + std::to_string(p) + " is not a supported prime");
  if (modulus.size() < 2 || modulus.size() > 5)
    fail(ErrorKind::DomainError, "extension degree must lie in [1, 4]");
  for (auto c : modulus)
    if (c >= p) fail(ErrorKind::DomainError, "modulus coefficients must lie in [0, p)");
  if (modulus.back() != 1) fail(ErrorKind::DomainError, "modulus must be monic");
  const unsigned m = static_cast<unsigned>(modulus.size() - 1);
  if (m == 1) return Field(p, {0, 1});
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q > (std::uint64_t{1} << 40) / p) fail(ErrorKind::DomainError, "extension field too large");
    q *= p;
  }
  for (unsigned d = 1; 2 * d <= m; ++d)
    if (has_monic_factor(modulus, d, p))
      fail(ErrorKind::DomainError, "modulus is reducible over F_" + std::to_string(p));
  return Field(p, std::move(modulus));
}

FieldElem Field::from_int(std::int64_t v) const noexcept {
  const auto pp = static_cast<std::int64_t>(p_);
  std::int64_t r = v % pp;
  if (r < 0) r += pp;
  return {static_cast<std::uint64_t>(r)};
}

FieldElem Field::from_coords(std::span<const std::uint64_t> c) const {
  if (c.size() != m_) fail(ErrorKind::DimensionMismatch, "expected " + std::to_string(m_) + " field coordinates");
  std::uint64_t code = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) fail(ErrorKind::DomainError, "field coordinate out of range");
    code = code * p_ + c[i];
  }
  return {code};
}

std::vector<std::uint64_t> Field::coords(FieldElem a) const {
  std::vector<std::uint64_t> c(m_);
  for (unsigned i = 0; i < m_; ++i) {
    c[i] = a.code % p_;
    a.code /= p_;
  }
  return c;
}

FieldElem Field::add_ext(FieldElem a, FieldElem b) const noexcept {
  std::uint64_t code = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint64_t s = a.code % p_ + b.code % p_;
    if (s >= p_) s -= p_;
    code += s * scale;
    scale *= p_;
    a.code /= p_;
    b.code /= p_;
  }
  return {code};
}

FieldElem Field::neg_ext(FieldElem a) const noexcept {
  std::uint64_t code = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint64_t d = a.code % p_;
    code += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a.code /= p_;
  }
  return {code};
}

FieldElem Field::mul_ext(FieldElem a, FieldElem b) const noexcept {
  std::uint64_t x[4] = {}, y[4] = {}, prod[8] = {};
  for (unsigned i = 0; i < m_; ++i) {
    x[i] = a.code % p_;
    y[i] = b.code % p_;
    a.code /= p_;
    b.code /= p_;
  }
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  // w^m = -sum_{i<m} modulus[i] w^i
  for (unsigned k = 2 * m_ - 1; k-- > m_;) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (unsigned i = 0; i < m_; ++i)
      prod[k - m_ + i] = (prod[k - m_ + i] + (p_ - (lead * modulus_[i]) % p_)) % p_;
  }
  std::uint64_t code = 0;
  for (unsigned i = m_; i-- > 0;) code = code * p_ + prod[i];
  return {code};
}

FieldElem Field::pow(FieldElem a, std::uint64_t e) const noexcept {
  FieldElem result = one();
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

FieldElem Field::inv(FieldElem a) const {
  if (a.code == 0) fail(ErrorKind::DomainError, "inverse of zero");
  if (m_ == 1) {
    std::int64_t t = 0, new_t = 1;
    auto r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a.code);
    while (new_r != 0) {
      const std::int64_t quot = r / new_r;
      t = std::exchange(new_t, t - quot * new_t);
      r = std::exchange(new_r, r - quot * new_r);
    }
    return from_int(t);
  }
  return pow(a, q_ - 2);
}

std::vector<FieldElem> Field::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (std::uint64_t c = 0; c < q_; ++c) out.push_back({c});
  return out;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (m_ > 1) {
    os << "^" << m_ << "[w]/(";
    for (std::size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (i != modulus_.size() - 1) os << " + ";
      if (modulus_[i] != 1 || i == 0) os << modulus_[i];
      if (i > 0) os << "w" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    os << ")";
  }
  return os.str();
}

TruncRing TruncRing::zp_squared(std::uint64_t p) { return TruncRing(Kind::ZpSquared, Field::prime(p)); }

TruncRing TruncRing::dual(Field residue) { return TruncRing(Kind::DualNumbers, std::move(residue)); }

RingElem TruncRing::from_int(std::int64_t v) const noexcept {
  if (kind_ == Kind::DualNumbers) return {k_.from_int(v), k_.zero()};
  const auto p = static_cast<std::int64_t>(k_.characteristic());
  std::int64_t r = v % (p * p);
  if (r < 0) r += p * p;
  return from_zp2_value(static_cast<std::uint64_t>(r));
}

RingElem TruncRing::from_zp2_value(std::uint64_t v) const noexcept {
  const std::uint64_t p = k_.characteristic();
  v %= p * p;
  return {{v % p}, {v / p}};
}

RingElem TruncRing::add(RingElem a, RingElem b) const noexcept {
  if (kind_ == Kind::DualNumbers) return {k_.add(a.lo, b.lo), k_.add(a.hi, b.hi)};
  const std::uint64_t p = k_.characteristic();
  std::uint64_t lo = a.lo.code + b.lo.code;
  std::uint64_t carry = 0;
  if (lo >= p) {
    lo -= p;
    carry = 1;
  }
  return {{lo}, {(a.hi.code + b.hi.code + carry) % p}};
}

RingElem TruncRing::neg(RingElem a) const noexcept {
  if (kind_ == Kind::DualNumbers) return {k_.neg(a.lo), k_.neg(a.hi)};
  const std::uint64_t p = k_.characteristic();
  const std::uint64_t v = zp2_value(a);
  return from_zp2_value(v == 0 ? 0 : p * p - v);
}

RingElem TruncRing::mul(RingElem a, RingElem b) const noexcept {
  if (kind_ == Kind::DualNumbers) {
    return {k_.mul(a.lo, b.lo), k_.add(k_.mul(a.lo, b.hi), k_.mul(a.hi, b.lo))};
  }
  const std::uint64_t p = k_.characteristic();
  const std::uint64_t t = a.lo.code * b.lo.code;
  const std::uint64_t hi = (t / p + (a.lo.code * b.hi.code) % p + (a.hi.code * b.lo.code) % p) % p;
  return {{t % p}, {hi}};
}

FieldElem TruncRing::pinv(RingElem x) const {
  if (x.lo.code != 0) fail(ErrorKind::DomainError, "p^{-1} applied to an element outside eps*R");
  return x.hi;
}

std::string TruncRing::describe() const {
  if (kind_ == Kind::ZpSquared) {
    const std::uint64_t p = k_.characteristic();
    return "Z/" + std::to_string(p * p);
  }
  return k_.describe() + "[t]/(t^2)";
}

}  // namespace hochlift
