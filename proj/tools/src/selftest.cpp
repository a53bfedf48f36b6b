#include "hochlift_cli/selftest.hpp"

#include <functional>
#include <string>

#include "hochlift/azumaya.hpp"
#include "hochlift/corpus.hpp"

namespace hochlift::cli {

namespace {

struct Suite {
  std::string name;
  std::size_t trials = 0;
  std::size_t passed = 0;
  io::Json failures = io::Json::array();

  void record(bool ok, const std::string& label) {
    ++trials;
    if (ok) ++passed;
    else if (failures.size() < 5) failures.push_back(label);
  }
  io::Json report() const {
    return {{"name", name}, {"trials", trials}, {"passed", passed}, {"failures", failures}};
  }
};

constexpr std::uint64_t kPrimes[] = {2, 3, 5};

void cocycle_suites(Rng& rng, Suite& cocycle, Suite& independence, Suite& corrected, Suite& antisym) {
  for (std::size_t t = 0; t < 100; ++t) {
    const auto c = random_lift_case(rng, kPrimes[t % 3]);
    const auto label = c.family + "#" + std::to_string(t);
    const auto ft1 = random_linear_lift(rng, c.lift, c.morphism);
    const auto ft2 = random_linear_lift(rng, c.lift, c.morphism);
    const auto complex = HochschildComplex::twisted(c.lift.base(), c.morphism);
    const auto c1 = defect_cocycle(c.lift, c.morphism, ft1);
    cocycle.record(complex.is_cocycle(c1), label);
    if (t < 50) {
      const auto c2 = defect_cocycle(c.lift, c.morphism, ft2);
      independence.record(c2 - c1 == complex.delta(lift_difference(c.lift, ft1, ft2)), label);
    }
    const auto decision = decide_lift(c.lift, c.morphism, ft1);
    if (const auto* ml = std::get_if<MultiplicativeLift>(&decision)) {
      const bool unital = ml->matrix.apply(c.lift.lift().unit()) == c.lift.lift().unit();
      corrected.record(is_multiplicative_lift(c.lift, ml->matrix) && unital, label);
    }
    const auto ref = antisym_check(c.lift, c.morphism, ft1);
    bool ok = ref.identity_holds;
    for (int r = 0; r < 3 && ok; ++r) {
      const auto other = antisym_check(c.lift, c.morphism, random_linear_lift(rng, c.lift, c.morphism));
      for (std::size_t e = 0; e < ref.entries.size(); ++e)
        ok = ok && other.entries[e].lhs == ref.entries[e].lhs && other.entries[e].rhs == ref.entries[e].rhs;
    }
    antisym.record(ok, label);
  }
}

void square_zero_suite(Rng& rng, Suite& suite) {
  for (std::size_t t = 0; t < 50; ++t) {
    const auto e = random_extension_case(rng, kPrimes[t % 3]);
    const HochschildComplex complex(e.z, e.m);
    const auto report = validate(build_square_zero_extension(e.z, e.m, e.phi));
    const bool cocycle = complex.is_cocycle(e.phi), symmetric = is_symmetric(e.phi);
    suite.record(report.associative == cocycle && report.commutative == symmetric &&
                     (report.associative && report.commutative) == (cocycle && symmetric),
                 e.family + "#" + std::to_string(t));
  }
}

void corpus_suites(Suite& poisson, Suite& probe, Suite& separability) {
  for (const auto& nl : lift_corpus()) {
    poisson.record(check_poisson_axioms(nl.lift).all(), nl.name);
    const bool separable = separability_element(nl.lift.base(), nl.lift.center()).element.has_value();
    separability.record(separable == nl.azumaya, nl.name);
    if (!separable) continue;
    for (const auto& m : nl.morphisms) probe.record(restriction_injectivity_probe(nl.lift, m.matrix).consistent, nl.name + "/" + m.name);
  }
  for (std::uint64_t p : kPrimes)
    for (std::size_t n : {2, 3}) {
      const auto a = matrix_algebra(Field::prime(p), n);
      const auto z = center(a);
      const auto res = separability_element(a, z);
      separability.record(res.element && is_separability_element(a, z, *res.element),
                          "mat" + std::to_string(n) + "_f" + std::to_string(p));
    }
}

void weyl_suites(Rng& rng, Suite& assoc, Suite& constants) {
  for (std::size_t t = 0; t < 200; ++t) {
    const auto p = kPrimes[t % 3];
    const bool lifted = t % 2 == 1;
    const unsigned n = 1 + static_cast<unsigned>(rng.below(2));
    const auto u = random_weyl(rng, n, p, lifted, 6, 3);
    const auto v = random_weyl(rng, n, p, lifted, 6, 3);
    const auto w = random_weyl(rng, n, p, lifted, 6, 3);
    assoc.record((u * v) * w == u * (v * w), "weyl#" + std::to_string(t));
  }
  for (std::uint64_t p : kPrimes) {
    const auto table = bracket_constants(p, 1);
    constants.record(table[0][1] == 1 && table[1][0] == p - 1 && table[0][0] == 0 && table[1][1] == 0,
                     "p=" + std::to_string(p));
  }
}

}  // namespace

io::Json run_selftest(std::uint64_t seed) {
  Rng rng(seed);
  Suite cocycle{"cocycle_law"}, independence{"class_independence"}, corrected{"corrected_lift"},
      antisym{"antisymmetrization"}, square_zero{"square_zero_extension"}, poisson{"poisson_axioms"},
      probe{"restriction_injectivity"}, separability{"separability"}, assoc{"weyl_associativity"},
      constants{"weyl_bracket_constants"};
  cocycle_suites(rng, cocycle, independence, corrected, antisym);
  square_zero_suite(rng, square_zero);
  corpus_suites(poisson, probe, separability);
  weyl_suites(rng, assoc, constants);

  io::Json suites = io::Json::array();
  bool all = true;
  for (const Suite* s : {&cocycle, &independence, &corrected, &antisym, &square_zero, &poisson, &probe, &separability,
                         &assoc, &constants}) {
    suites.push_back(s->report());
    all = all && s->passed == s->trials;
  }
  return {{"seed", seed}, {"suites", std::move(suites)}, {"all_passed", all}};
}

}  // namespace hochlift::cli
