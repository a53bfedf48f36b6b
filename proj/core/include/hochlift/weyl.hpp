#pragma once

// Weyl algebras A_n over F_p and Z/p^2 in normal order (x's left of d's).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hochlift {

/// Exponents (alpha_1..alpha_n, beta_1..beta_n) of x^alpha d^beta.
using WeylMonomial = std::vector<std::uint32_t>;

/// Degree-lex: total degree first, then lexicographic on (alpha, beta).
struct DegLex {
  bool operator()(const WeylMonomial& a, const WeylMonomial& b) const;
};

/// Element of A_n(F_p) (lifted = false) or A_n(Z/p^2) (lifted = true).
/// Coefficients are stored as least residues; zero coefficients never appear.
class WeylElem {
 public:
  using Terms = std::map<WeylMonomial, std::uint64_t, DegLex>;

  WeylElem(unsigned n, std::uint64_t p, bool lifted);

  static WeylElem constant(unsigned n, std::uint64_t p, bool lifted, std::int64_t c);
  static WeylElem x(unsigned n, std::uint64_t p, bool lifted, unsigned i);
  static WeylElem d(unsigned n, std::uint64_t p, bool lifted, unsigned i);
  static WeylElem monomial(std::uint64_t p, bool lifted, const std::vector<std::uint32_t>& alpha,
                           const std::vector<std::uint32_t>& beta, std::int64_t c);

  unsigned n() const noexcept { return n_; }
  std::uint64_t p() const noexcept { return p_; }
  bool lifted() const noexcept { return lifted_; }
  std::uint64_t modulus() const noexcept { return lifted_ ? p_ * p_ : p_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::uint32_t total_degree() const;

  /// Adds c * monomial (c taken modulo the coefficient modulus).
  void add_term(const WeylMonomial& m, std::int64_t c);
  void add_term_mod(const WeylMonomial& m, std::uint64_t c);

  WeylElem operator+(const WeylElem& rhs) const;
  WeylElem operator-(const WeylElem& rhs) const;
  WeylElem operator-() const;
  WeylElem scaled(std::uint64_t c) const;
  friend bool operator==(const WeylElem&, const WeylElem&) = default;

  /// Coefficientwise reduction Z/p^2 -> F_p.
  WeylElem reduce() const;
  /// Least-representative section F_p -> Z/p^2.
  WeylElem section() const;
  /// F_p -> Z/p^2, w |-> p w.
  WeylElem iota() const;
  /// Z/p^2 -> F_p on p-divisible elements; DomainError otherwise.
  WeylElem pinv() const;

  std::string to_string() const;

 private:
  unsigned n_;
  std::uint64_t p_;
  bool lifted_;
  Terms terms_;
};

WeylElem weyl_mul(const WeylElem& u, const WeylElem& v);
WeylElem operator*(const WeylElem& u, const WeylElem& v);
WeylElem commutator(const WeylElem& u, const WeylElem& v);
WeylElem weyl_pow(const WeylElem& u, std::uint64_t e);

/// Images of x_1..x_n and d_1..d_n.
struct WeylEndo {
  std::vector<WeylElem> images_x;
  std::vector<WeylElem> images_d;

  unsigned n() const;
  std::uint64_t p() const;
  bool lifted() const;
  /// Throws MismatchedSignature unless all 2n images share (n, p, ring).
  void check_signature() const;
  /// Generator g in 0..2n-1: x_1..x_n then d_1..d_n.
  const WeylElem& image(unsigned g) const { return g < images_x.size() ? images_x[g] : images_d[g - images_x.size()]; }
};

/// A defining relation [f(g1), f(g2)] = expected that fails, with the residual.
struct RelationFailure {
  unsigned g1 = 0, g2 = 0;  // generator indices as in WeylEndo::image
  WeylElem residual;        // [f(g1), f(g2)] - expected
};

std::optional<RelationFailure> first_failed_relation(const WeylEndo& f);
bool is_weyl_endo(const WeylEndo& f);

/// Polynomial in X_1..X_n, D_1..D_n (X_i = x_i^p, D_i = d_i^p) over F_p.
struct CenterPoly {
  unsigned n = 0;
  std::uint64_t p = 0;
  std::map<WeylMonomial, std::uint64_t, DegLex> terms;

  friend bool operator==(const CenterPoly&, const CenterPoly&) = default;
  bool is_zero() const noexcept { return terms.empty(); }
  std::string to_string() const;
};

CenterPoly center_constant(unsigned n, std::uint64_t p, std::int64_t c);
CenterPoly operator+(const CenterPoly& a, const CenterPoly& b);
CenterPoly operator*(const CenterPoly& a, const CenterPoly& b);
/// Partial derivative in variable v (0..n-1 for X, n..2n-1 for D).
CenterPoly partial(const CenterPoly& a, unsigned v);

/// NotCentral (naming the monomial) unless every exponent is divisible by p.
CenterPoly central_rewrite(const WeylElem& w);
/// Inverse of central_rewrite.
WeylElem evaluate(const CenterPoly& c);

/// 2n x 2n table over F_p: entry (u, v) = pinv([u~, v~]) for u, v in
/// (x_1^p..x_n^p, d_1^p..d_n^p), computed in A_n(Z/p^2).
std::vector<std::vector<std::uint64_t>> bracket_constants(std::uint64_t p, unsigned n);

/// {F, G} = sum_{u,v} c(u,v) dF/du dG/dv with c from bracket_constants.
CenterPoly center_bracket(const std::vector<std::vector<std::uint64_t>>& constants, const CenterPoly& a,
                          const CenterPoly& b);

struct WeylPoissonReport {
  bool preserved = true;
  std::vector<CenterPoly> images;  // F(X_1..X_n, D_1..D_n)
  struct Mismatch {
    unsigned u = 0, v = 0;
    CenterPoly lhs;  // {F u, F v}
    CenterPoly rhs;  // F{u, v}
  };
  std::optional<Mismatch> mismatch;
};

/// NotAnEndo unless is_weyl_endo(f); f must be over F_p.
WeylPoissonReport poisson_check(const WeylEndo& f);
bool poisson_preserves(const WeylEndo& f);
bool decide_weyl_lift(const WeylEndo& f);

struct WeylLift {
  WeylEndo lifted;                  // images over Z/p^2
  std::vector<WeylElem> corrections;  // u_1..u_n, v_1..v_n over F_p
};

struct NotFoundWithinBound {
  std::uint32_t degree_bound = 0;
  std::size_t inconsistent_row = 0;
};

std::variant<WeylLift, NotFoundWithinBound> search_lift(const WeylEndo& f, std::uint32_t degree_bound);

}  // namespace hochlift
