#pragma once

// Named examples and seeded random generators used by the tests, the
// self-test report and the bundled data files.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hochlift/builders.hpp"
#include "hochlift/hochschild.hpp"
#include "hochlift/liftkit.hpp"
#include "hochlift/weyl.hpp"

namespace hochlift {

/// mt19937_64 with a modulo reduction, so draws are identical on every
/// standard library (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool coin() { return below(2) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 engine_;
};

FieldElem random_element(Rng& rng, const Field& k);
FVec random_vector(Rng& rng, const Field& k, std::size_t n);
FMatrix random_matrix(Rng& rng, const Field& k, std::size_t rows, std::size_t cols);
FMatrix random_invertible(Rng& rng, const Field& k, std::size_t n);
Cochain random_cochain(Rng& rng, const Field& k, unsigned degree, std::size_t source_dim, std::size_t module_dim);

struct NamedMorphism {
  std::string name;
  FMatrix matrix;
};

struct NamedLift {
  std::string name;
  FlatLift lift;
  std::vector<NamedMorphism> morphisms;
  bool azumaya = false;  // separable over its center
};

struct NamedAlgebra {
  std::string name;
  FAlgebra algebra;
  std::vector<NamedMorphism> morphisms;  // ring endomorphisms, as F_p-matrices where needed
};

/// Mat_2(F_3) with Mat_2(Z/9).
FlatLift mat2_f3_lift();
/// Conjugation by [[1,1],[0,1]] on Mat_2(F_3).
FMatrix mat2_f3_conjugation();
/// F_5[x,y]/(x^2,y^3) with its log-symplectic lift over Z/25.
FlatLift logsymp_5_2_3();
MonomialAlgebra<Field> logsymp_5_2_3_base();
/// x |-> x, y |-> y^2 on F_5[x,y]/(x^2,y^3).
FMatrix y_to_ysq();
/// F_4 x Mat_2(F_4) viewed over F_2 (dimension 10).
FAlgebra f4_times_mat2f4();
/// (a, m) |-> (a, diag(a, a^2)), as an F_2-matrix.
FMatrix f4_diag_frobenius();
/// x |-> x, d |-> d + x^3 d^4 on A_1(F_2).
WeylEndo p2_weyl_example();

/// Every flat lift with its morphisms; each passes FlatLift validation.
std::vector<NamedLift> lift_corpus();
/// Algebras for the center-preservation checks.
std::vector<NamedAlgebra> center_corpus();

struct RandomLiftCase {
  std::string family;
  FlatLift lift;
  FMatrix morphism;
};

/// A random flat lift of dimension <= max_dim over F_p with a random algebra
/// endomorphism, drawn from the builder families.
RandomLiftCase random_lift_case(Rng& rng, std::uint64_t p, std::size_t max_dim = 6);
/// section(f) + iota(random matrix).
RMatrix random_linear_lift(Rng& rng, const FlatLift& l, const FMatrix& f);

struct RandomExtensionCase {
  std::string family;
  FAlgebra z;
  Bimodule m;
  Cochain phi;
};

/// Commutative Z of dimension <= 4, diagonal M = Z twisted by an endomorphism,
/// and a 2-cochain mixing cocycles, coboundaries and noise.
RandomExtensionCase random_extension_case(Rng& rng, std::uint64_t p);

/// Up to `terms` random monomials of total degree <= max_degree.
WeylElem random_weyl(Rng& rng, unsigned n, std::uint64_t p, bool lifted, std::uint32_t max_degree, std::size_t terms);

}  // namespace hochlift
