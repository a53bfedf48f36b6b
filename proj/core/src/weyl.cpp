#include "hochlift/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hochlift/coeff.hpp"
#include "hochlift/error.hpp"
#include "hochlift/linalg.hpp"

namespace hochlift {

namespace {

constexpr std::uint64_t kMaxWeylPrime = 65521;

std::uint64_t residue(std::int64_t c, std::uint64_t mod) {
  const auto m = static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(((c % m) + m) % m);
}

std::uint32_t degree_of(const WeylMonomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

void check_same(const WeylElem& u, const WeylElem& v) {
  if (u.n() != v.n() || u.p() != v.p() || u.lifted() != v.lifted())
    fail(ErrorKind::MismatchedSignature, "Weyl elements over different algebras");
}

std::string monomial_text(const WeylMonomial& m, unsigned n, const char* xs, const char* ds) {
  std::string out;
  for (unsigned v = 0; v < 2 * n; ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += v < n ? xs : ds;
    if (n > 1) out += std::to_string((v % n) + 1);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out;
}

template <class Terms>
std::string poly_text(const Terms& terms, unsigned n, const char* xs, const char* ds) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    const auto mono = monomial_text(it->first, n, xs, ds);
    if (mono.empty()) {
      out += std::to_string(it->second);
    } else {
      if (it->second != 1) out += std::to_string(it->second) + '*';
      out += mono;
    }
  }
  return out;
}

// k! C(b, k) C(c, k) mod N for all b, c, k up to a bound.
class OrderingTable {
 public:
  OrderingTable(std::uint64_t mod, std::uint32_t bound) : mod_(mod), bound_(bound) {
    binom_.assign(static_cast<std::size_t>(bound + 1) * (bound + 1), 0);
    for (std::uint32_t a = 0; a <= bound; ++a) {
      binom(a, 0) = 1 % mod;
      for (std::uint32_t k = 1; k <= a; ++k) binom(a, k) = (binom(a - 1, k - 1) + (k < a ? binom(a - 1, k) : 0)) % mod;
    }
    fact_.assign(bound + 1, 1 % mod);
    for (std::uint32_t k = 1; k <= bound; ++k) fact_[k] = fact_[k - 1] * k % mod;
  }

  std::uint64_t weight(std::uint32_t b, std::uint32_t c, std::uint32_t k) const {
    return fact_[k] * binom_at(b, k) % mod_ * binom_at(c, k) % mod_;
  }

 private:
  std::uint64_t& binom(std::uint32_t a, std::uint32_t k) { return binom_[a * (bound_ + 1) + k]; }
  std::uint64_t binom_at(std::uint32_t a, std::uint32_t k) const { return binom_[a * (bound_ + 1) + k]; }

  std::uint64_t mod_;
  std::uint32_t bound_;
  std::vector<std::uint64_t> binom_;
  std::vector<std::uint64_t> fact_;
};

}  // namespace

bool DegLex::operator()(const WeylMonomial& a, const WeylMonomial& b) const {
  const auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return a < b;
}

WeylElem::WeylElem(unsigned n, std::uint64_t p, bool lifted) : n_(n), p_(p), lifted_(lifted) {
  if (n == 0) fail(ErrorKind::DomainError, "Weyl algebra needs n >= 1");
  if (p > kMaxWeylPrime || !is_prime(p)) fail(ErrorKind::DomainError, "Weyl characteristic must be a prime below 65536");
}

WeylElem WeylElem::constant(unsigned n, std::uint64_t p, bool lifted, std::int64_t c) {
  WeylElem w(n, p, lifted);
  w.add_term(WeylMonomial(2 * n, 0), c);
  return w;
}

WeylElem WeylElem::x(unsigned n, std::uint64_t p, bool lifted, unsigned i) {
  WeylElem w(n, p, lifted);
  WeylMonomial m(2 * n, 0);
  m.at(i) = 1;
  w.add_term(m, 1);
  return w;
}

WeylElem WeylElem::d(unsigned n, std::uint64_t p, bool lifted, unsigned i) {
  WeylElem w(n, p, lifted);
  WeylMonomial m(2 * n, 0);
  m.at(n + i) = 1;
  w.add_term(m, 1);
  return w;
}

WeylElem WeylElem::monomial(std::uint64_t p, bool lifted, const std::vector<std::uint32_t>& alpha,
                            const std::vector<std::uint32_t>& beta, std::int64_t c) {
  if (alpha.size() != beta.size()) fail(ErrorKind::MismatchedSignature, "x and d exponent vectors differ in length");
  WeylElem w(static_cast<unsigned>(alpha.size()), p, lifted);
  WeylMonomial m(alpha);
  m.insert(m.end(), beta.begin(), beta.end());
  w.add_term(m, c);
  return w;
}

std::uint32_t WeylElem::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.rbegin()->first); }

void WeylElem::add_term(const WeylMonomial& m, std::int64_t c) { add_term_mod(m, residue(c, modulus())); }

void WeylElem::add_term_mod(const WeylMonomial& m, std::uint64_t c) {
  if (m.size() != 2 * n_) fail(ErrorKind::MismatchedSignature, "monomial has the wrong number of exponents");
  const auto mod = modulus();
  c %= mod;
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % mod;
    if (it->second == 0) terms_.erase(it);
  }
}

WeylElem WeylElem::operator+(const WeylElem& rhs) const {
  check_same(*this, rhs);
  WeylElem out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add_term_mod(m, c);
  return out;
}

WeylElem WeylElem::operator-() const { return scaled(modulus() - 1); }

WeylElem WeylElem::operator-(const WeylElem& rhs) const { return *this + (-rhs); }

WeylElem WeylElem::scaled(std::uint64_t c) const {
  WeylElem out(n_, p_, lifted_);
  const auto mod = modulus();
  for (const auto& [m, v] : terms_) out.add_term_mod(m, v * (c % mod) % mod);
  return out;
}

WeylElem WeylElem::reduce() const {
  if (!lifted_) return *this;
  WeylElem out(n_, p_, false);
  for (const auto& [m, c] : terms_) out.add_term_mod(m, c % p_);
  return out;
}

WeylElem WeylElem::section() const {
  if (lifted_) fail(ErrorKind::DomainError, "section expects an element over F_p");
  WeylElem out(n_, p_, true);
  out.terms_ = terms_;
  return out;
}

WeylElem WeylElem::iota() const {
  if (lifted_) fail(ErrorKind::DomainError, "iota expects an element over F_p");
  WeylElem out(n_, p_, true);
  for (const auto& [m, c] : terms_) out.add_term_mod(m, c * p_);
  return out;
}

WeylElem WeylElem::pinv() const {
  if (!lifted_) fail(ErrorKind::DomainError, "pinv expects an element over Z/p^2");
  WeylElem out(n_, p_, false);
  for (const auto& [m, c] : terms_) {
    if (c % p_ != 0) fail(ErrorKind::DomainError, "pinv of an element not divisible by p");
    out.add_term_mod(m, c / p_);
  }
  return out;
}

std::string WeylElem::to_string() const { return poly_text(terms_, n_, "x", "d"); }

WeylElem weyl_mul(const WeylElem& u, const WeylElem& v) {
  check_same(u, v);
  const unsigned n = u.n();
  const auto mod = u.modulus();
  std::uint32_t bound = 0;
  for (const auto& [m, c] : u.terms())
    for (unsigned i = 0; i < n; ++i) bound = std::max(bound, m[n + i]);
  for (const auto& [m, c] : v.terms())
    for (unsigned i = 0; i < n; ++i) bound = std::max(bound, m[i]);
  const OrderingTable table(mod, bound);

  WeylElem out(n, u.p(), u.lifted());
  // Per generator pair: d^b x^c = sum_k k! C(b,k) C(c,k) x^(c-k) d^(b-k).
  std::vector<std::uint32_t> k(n);
  for (const auto& [mu, cu] : u.terms())
    for (const auto& [mv, cv] : v.terms()) {
      const std::uint64_t base = cu * cv % mod;
      std::vector<std::uint32_t> kmax(n);
      for (unsigned i = 0; i < n; ++i) kmax[i] = std::min(mu[n + i], mv[i]);
      std::fill(k.begin(), k.end(), 0);
      while (true) {
        std::uint64_t c = base;
        for (unsigned i = 0; i < n && c != 0; ++i) c = c * table.weight(mu[n + i], mv[i], k[i]) % mod;
        if (c != 0) {
          WeylMonomial m(2 * n);
          for (unsigned i = 0; i < n; ++i) {
            m[i] = mu[i] + mv[i] - k[i];
            m[n + i] = mu[n + i] - k[i] + mv[n + i];
          }
          out.add_term_mod(m, c);
        }
        unsigned i = 0;
        while (i < n && k[i] == kmax[i]) k[i++] = 0;
        if (i == n) break;
        ++k[i];
      }
    }
  return out;
}

WeylElem operator*(const WeylElem& u, const WeylElem& v) { return weyl_mul(u, v); }

WeylElem commutator(const WeylElem& u, const WeylElem& v) { return weyl_mul(u, v) - weyl_mul(v, u); }

WeylElem weyl_pow(const WeylElem& u, std::uint64_t e) {
  WeylElem out = WeylElem::constant(u.n(), u.p(), u.lifted(), 1);
  WeylElem base = u;
  while (e > 0) {
    if (e & 1U) out = out * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return out;
}

unsigned WeylEndo::n() const { return static_cast<unsigned>(images_x.size()); }

std::uint64_t WeylEndo::p() const { return images_x.empty() ? 0 : images_x.front().p(); }

bool WeylEndo::lifted() const { return !images_x.empty() && images_x.front().lifted(); }

void WeylEndo::check_signature() const {
  if (images_x.empty() || images_x.size() != images_d.size())
    fail(ErrorKind::MismatchedSignature, "endomorphism needs n images of x and n images of d, n >= 1");
  const auto& ref = images_x.front();
  for (unsigned g = 0; g < 2 * n(); ++g) {
    const auto& w = image(g);
    if (w.n() != n() || w.p() != ref.p() || w.lifted() != ref.lifted())
      fail(ErrorKind::MismatchedSignature, "generator images live in different Weyl algebras");
  }
}

namespace {

struct Relation {
  unsigned g1, g2;
  std::int64_t expected;
};

// [f(d_i), f(x_j)] = delta_ij, [f(x_i), f(x_j)] = 0, [f(d_i), f(d_j)] = 0.
std::vector<Relation> defining_relations(unsigned n) {
  std::vector<Relation> rel;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) rel.push_back({n + i, j, i == j ? 1 : 0});
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j) {
      rel.push_back({i, j, 0});
      rel.push_back({n + i, n + j, 0});
    }
  return rel;
}

WeylElem residual(const WeylEndo& f, const Relation& r) {
  const auto& a = f.image(r.g1);
  return commutator(a, f.image(r.g2)) - WeylElem::constant(a.n(), a.p(), a.lifted(), r.expected);
}

}  // namespace

std::optional<RelationFailure> first_failed_relation(const WeylEndo& f) {
  f.check_signature();
  for (const auto& r : defining_relations(f.n())) {
    auto res = residual(f, r);
    if (!res.is_zero()) return RelationFailure{r.g1, r.g2, std::move(res)};
  }
  return std::nullopt;
}

bool is_weyl_endo(const WeylEndo& f) { return !first_failed_relation(f).has_value(); }

std::string CenterPoly::to_string() const { return poly_text(terms, n, "X", "D"); }

CenterPoly center_constant(unsigned n, std::uint64_t p, std::int64_t c) {
  CenterPoly out{n, p, {}};
  if (const auto r = residue(c, p); r != 0) out.terms.emplace(WeylMonomial(2 * n, 0), r);
  return out;
}

namespace {

void add_center_term(CenterPoly& a, const WeylMonomial& m, std::uint64_t c) {
  c %= a.p;
  if (c == 0) return;
  auto [it, inserted] = a.terms.try_emplace(m, c);
  if (!inserted) {
    it->second = (it->second + c) % a.p;
    if (it->second == 0) a.terms.erase(it);
  }
}

}  // namespace

CenterPoly operator+(const CenterPoly& a, const CenterPoly& b) {
  if (a.n != b.n || a.p != b.p) fail(ErrorKind::MismatchedSignature, "center polynomials over different rings");
  CenterPoly out = a;
  for (const auto& [m, c] : b.terms) add_center_term(out, m, c);
  return out;
}

CenterPoly operator*(const CenterPoly& a, const CenterPoly& b) {
  if (a.n != b.n || a.p != b.p) fail(ErrorKind::MismatchedSignature, "center polynomials over different rings");
  CenterPoly out{a.n, a.p, {}};
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms) {
      WeylMonomial m(ma.size());
      for (std::size_t v = 0; v < m.size(); ++v) m[v] = ma[v] + mb[v];
      add_center_term(out, m, ca * cb % a.p);
    }
  return out;
}

CenterPoly partial(const CenterPoly& a, unsigned v) {
  CenterPoly out{a.n, a.p, {}};
  for (const auto& [m, c] : a.terms) {
    if (m.at(v) == 0) continue;
    WeylMonomial dm = m;
    --dm[v];
    add_center_term(out, dm, c * (m[v] % a.p) % a.p);
  }
  return out;
}

CenterPoly central_rewrite(const WeylElem& w) {
  if (w.lifted()) fail(ErrorKind::DomainError, "central_rewrite works over F_p");
  CenterPoly out{w.n(), w.p(), {}};
  for (const auto& [m, c] : w.terms()) {
    WeylMonomial q(m.size());
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] % w.p() != 0) {
        WeylElem mono(w.n(), w.p(), false);
        mono.add_term_mod(m, 1);
        fail(ErrorKind::NotCentral, "monomial " + mono.to_string() + " has an exponent not divisible by p");
      }
      q[v] = static_cast<std::uint32_t>(m[v] / w.p());
    }
    out.terms.emplace(std::move(q), c);
  }
  return out;
}

WeylElem evaluate(const CenterPoly& c) {
  WeylElem out(c.n, c.p, false);
  for (const auto& [m, v] : c.terms) {
    WeylMonomial e(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) e[i] = static_cast<std::uint32_t>(m[i] * c.p);
    out.add_term_mod(e, v);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> bracket_constants(std::uint64_t p, unsigned n) {
  std::vector<WeylElem> gens;
  for (unsigned g = 0; g < 2 * n; ++g) {
    const auto base = g < n ? WeylElem::x(n, p, true, g) : WeylElem::d(n, p, true, g - n);
    gens.push_back(weyl_pow(base, p));
  }
  std::vector<std::vector<std::uint64_t>> table(2 * n, std::vector<std::uint64_t>(2 * n, 0));
  for (unsigned u = 0; u < 2 * n; ++u)
    for (unsigned v = 0; v < 2 * n; ++v) {
      const auto br = commutator(gens[u], gens[v]).pinv();
      // brackets of p-th powers are constants; anything else is an engine fault
      for (const auto& [m, c] : br.terms()) {
        if (degree_of(m) != 0) throw std::logic_error("non-constant bracket of p-th powers");
        table[u][v] = c;
      }
    }
  return table;
}

CenterPoly center_bracket(const std::vector<std::vector<std::uint64_t>>& constants, const CenterPoly& a,
                          const CenterPoly& b) {
  CenterPoly out{a.n, a.p, {}};
  const unsigned vars = 2 * a.n;
  if (constants.size() != vars) fail(ErrorKind::MismatchedSignature, "bracket table has the wrong size");
  for (unsigned u = 0; u < vars; ++u) {
    const auto da = partial(a, u);
    if (da.is_zero()) continue;
    for (unsigned v = 0; v < vars; ++v) {
      if (constants[u][v] == 0) continue;
      auto term = da * partial(b, v);
      for (auto& [m, c] : term.terms) c = c * constants[u][v] % a.p;
      out = out + term;
    }
  }
  return out;
}

WeylPoissonReport poisson_check(const WeylEndo& f) {
  f.check_signature();
  if (f.lifted()) fail(ErrorKind::DomainError, "the Poisson check takes an endomorphism over F_p");
  if (!is_weyl_endo(f)) fail(ErrorKind::NotAnEndo, "images violate the Weyl relations");
  const unsigned n = f.n();
  const auto p = f.p();
  const auto constants = bracket_constants(p, n);
  WeylPoissonReport rep;
  for (unsigned g = 0; g < 2 * n; ++g) rep.images.push_back(central_rewrite(weyl_pow(f.image(g), p)));
  for (unsigned u = 0; u < 2 * n && rep.preserved; ++u)
    for (unsigned v = u + 1; v < 2 * n; ++v) {
      auto lhs = center_bracket(constants, rep.images[u], rep.images[v]);
      auto rhs = center_constant(n, p, static_cast<std::int64_t>(constants[u][v]));
      if (lhs != rhs) {
        rep.preserved = false;
        rep.mismatch = WeylPoissonReport::Mismatch{u, v, std::move(lhs), std::move(rhs)};
        break;
      }
    }
  return rep;
}

bool poisson_preserves(const WeylEndo& f) { return poisson_check(f).preserved; }

bool decide_weyl_lift(const WeylEndo& f) { return poisson_preserves(f); }

namespace {

std::vector<WeylMonomial> monomials_up_to(unsigned vars, std::uint32_t bound) {
  std::vector<WeylMonomial> out;
  WeylMonomial m(vars, 0);
  // enumerate exponent vectors with total degree <= bound
  auto rec = [&](auto&& self, unsigned v, std::uint32_t left) -> void {
    if (v == vars) {
      out.push_back(m);
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      m[v] = e;
      self(self, v + 1, left - e);
    }
    m[v] = 0;
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end(), DegLex{});
  return out;
}

}  // namespace

std::variant<WeylLift, NotFoundWithinBound> search_lift(const WeylEndo& f, std::uint32_t degree_bound) {
  f.check_signature();
  if (f.lifted()) fail(ErrorKind::DomainError, "search_lift takes an endomorphism over F_p");
  if (!is_weyl_endo(f)) fail(ErrorKind::NotAnEndo, "images violate the Weyl relations");
  const unsigned n = f.n(), gens = 2 * n;
  const auto p = f.p();
  const auto k = Field::prime(p);

  WeylEndo naive;
  for (unsigned i = 0; i < n; ++i) {
    naive.images_x.push_back(f.images_x[i].section());
    naive.images_d.push_back(f.images_d[i].section());
  }
  const auto relations = defining_relations(n);
  const auto monos = monomials_up_to(gens, degree_bound);
  const std::size_t unknowns = gens * monos.size();

  // Rows: (relation, monomial). Equation: rho + [u_g1, f g2] + [f g1, u_g2] = 0 over F_p.
  std::map<std::pair<std::size_t, WeylMonomial>, std::size_t> row_of;
  auto row_index = [&](std::size_t rel, const WeylMonomial& m) {
    return row_of.try_emplace({rel, m}, row_of.size()).first->second;
  };
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> columns(unknowns);
  std::vector<std::pair<std::size_t, std::uint64_t>> rhs_entries;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    const auto& rel = relations[r];
    const auto rho = residual(naive, rel).pinv();
    for (const auto& [m, c] : rho.terms()) rhs_entries.emplace_back(row_index(r, m), (p - c) % p);
    for (std::size_t t = 0; t < monos.size(); ++t) {
      WeylElem w(n, p, false);
      w.add_term_mod(monos[t], 1);
      const auto left = commutator(w, f.image(rel.g2));
      for (const auto& [m, c] : left.terms()) columns[rel.g1 * monos.size() + t].emplace_back(row_index(r, m), c);
      const auto right = commutator(f.image(rel.g1), w);
      for (const auto& [m, c] : right.terms()) columns[rel.g2 * monos.size() + t].emplace_back(row_index(r, m), c);
    }
  }
  const std::size_t rows = row_of.size();
  if (rows * unknowns > (std::size_t{1} << 28)) fail(ErrorKind::CapacityExceeded, "lift search system too large");
  FMatrix m(k, rows, unknowns);
  for (std::size_t col = 0; col < unknowns; ++col)
    for (const auto& [row, c] : columns[col]) m(row, col) = k.add(m(row, col), k.from_int(static_cast<std::int64_t>(c)));
  FVec rhs(rows, k.zero());
  for (const auto& [row, c] : rhs_entries) rhs[row] = k.add(rhs[row], k.from_int(static_cast<std::int64_t>(c)));

  auto sol = solve(m, rhs);
  if (const auto* inf = std::get_if<Infeasible>(&sol)) return NotFoundWithinBound{degree_bound, inf->inconsistent_row};
  const auto& x = std::get<FVec>(sol);

  WeylLift out;
  for (unsigned g = 0; g < gens; ++g) {
    WeylElem u(n, p, false);
    for (std::size_t t = 0; t < monos.size(); ++t) u.add_term_mod(monos[t], x[g * monos.size() + t].code);
    out.corrections.push_back(u);
    auto img = f.image(g).section() + u.iota();
    (g < n ? out.lifted.images_x : out.lifted.images_d).push_back(std::move(img));
  }
  if (first_failed_relation(out.lifted)) throw std::logic_error("lift search produced a non-lift");
  return out;
}

}  // namespace hochlift
