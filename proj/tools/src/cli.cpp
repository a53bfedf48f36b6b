#include "hochlift_cli/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "hochlift/azumaya.hpp"
#include "hochlift_cli/io.hpp"
#include "hochlift_cli/selftest.hpp"

namespace hochlift::cli {

namespace {

using io::Json;

struct Outcome {
  int code;
  Json report;
};

struct Options {
  std::uint64_t seed = 42;
  std::string format = "json";
  std::uint32_t degree_bound = 8;
  bool formally_smooth = false;
  bool over_ground_field = false;
  std::uint64_t p = 0;
  unsigned n = 1;
  std::vector<std::string> files;
};

void need_files(const Options& o, std::size_t lo, std::size_t hi) {
  if (o.files.size() < lo || o.files.size() > hi)
    fail(ErrorKind::ParseError, "expected " + std::to_string(lo) + (lo == hi ? "" : "-" + std::to_string(hi)) +
                                    " input file(s), got " + std::to_string(o.files.size()));
}

FMatrix read_endo(const Field& k, const std::string& path, std::size_t dim) {
  return io::parse_matrix(k, io::read_json_file(path), dim);
}

FMatrix endo_or_identity(const Options& o, std::size_t index, const FAlgebra& a) {
  return o.files.size() > index ? read_endo(a.ring(), o.files[index], a.dim()) : FMatrix::identity(a.ring(), a.dim());
}

Json basis_json(const Field& k, const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis()) out.push_back(io::to_json(k, v));
  return out;
}

// ---- algebra -------------------------------------------------------------

Outcome algebra_validate(const Options& o) {
  need_files(o, 1, 1);
  const auto j = io::read_json_file(o.files[0]);
  AlgebraReport r;
  std::size_t dim = 0;
  if (io::is_ring_algebra(j)) {
    const auto a = io::parse_ring_algebra(j);
    r = validate(a);
    dim = a.dim();
  } else {
    const auto a = io::parse_field_algebra(j);
    r = validate(a);
    dim = a.dim();
  }
  Json rep{{"dim", dim}, {"associative", r.associative}, {"unital", r.unital}, {"commutative", r.commutative}};
  return {r.associative && r.unital ? kAffirmative : kNegative, rep};
}

Outcome algebra_center(const Options& o) {
  need_files(o, 1, 1);
  const auto a = io::parse_field_algebra(io::read_json_file(o.files[0]));
  const auto z = center(a);
  return {kAffirmative, {{"center_dim", z.dim()}, {"basis", basis_json(a.ring(), z)}}};
}

// ---- hochschild ----------------------------------------------------------

Outcome hochschild_dim(const Options& o) {
  need_files(o, 1, 2);
  const auto a = io::parse_field_algebra(io::read_json_file(o.files[0]));
  const auto complex = HochschildComplex::twisted(a, endo_or_identity(o, 1, a));
  return {kAffirmative, {{"hh", {complex.hh_dim(0), complex.hh_dim(1), complex.hh_dim(2)}}}};
}

Outcome hochschild_cocycle(const Options& o) {
  need_files(o, 2, 3);
  const auto a = io::parse_field_algebra(io::read_json_file(o.files[0]));
  const auto complex = HochschildComplex::twisted(a, endo_or_identity(o, 2, a));
  const auto c = io::parse_cochain(a.ring(), io::read_json_file(o.files[1]), a.dim(), a.dim());
  const auto dc = complex.delta(c);
  const bool ok = dc.is_zero();
  return {ok ? kAffirmative : kNegative, {{"cocycle", ok}, {"delta", ok ? Json(nullptr) : io::to_json(dc)}}};
}

Outcome hochschild_solve(const Options& o) {
  need_files(o, 2, 3);
  const auto a = io::parse_field_algebra(io::read_json_file(o.files[0]));
  const auto complex = HochschildComplex::twisted(a, endo_or_identity(o, 2, a));
  const auto c = io::parse_cochain(a.ring(), io::read_json_file(o.files[1]), a.dim(), a.dim());
  const auto res = complex.coboundary_solve(c);
  if (const auto* h = std::get_if<Cochain>(&res))
    return {kAffirmative, {{"solvable", true}, {"h", io::to_json(*h)}, {"inconsistent_row", nullptr}}};
  return {kNegative,
          {{"solvable", false}, {"h", nullptr}, {"inconsistent_row", std::get<Infeasible>(res).inconsistent_row}}};
}

// ---- lift ----------------------------------------------------------------

Json antisym_json(const FlatLift& l, const AntisymReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"i", e.i}, {"j", e.j}, {"lhs", io::to_json(l.field(), e.lhs)}, {"rhs", io::to_json(l.field(), e.rhs)}});
  return {{"identity_holds", r.identity_holds},
          {"restricted_symmetric", r.restricted_symmetric},
          {"bracket_preserved", r.bracket_preserved},
          {"center_basis", basis_json(l.field(), l.center())},
          {"entries", std::move(entries)}};
}

Outcome lift_decide(const Options& o) {
  need_files(o, 2, 2);
  const auto l = io::parse_flat_lift(io::read_json_file(o.files[0]));
  const auto f = read_endo(l.field(), o.files[1], l.dim());
  const auto decision = decide_lift(l, f);
  Json rep;
  const bool liftable = std::holds_alternative<MultiplicativeLift>(decision);
  rep["liftable"] = liftable;
  if (const auto* ml = std::get_if<MultiplicativeLift>(&decision)) {
    rep["lift_matrix"] = io::to_json(ml->matrix)["matrix"];
    rep["obstruction"] = nullptr;
    rep["inconsistent_row"] = nullptr;
  } else {
    const auto& ob = std::get<Obstruction>(decision);
    rep["lift_matrix"] = nullptr;
    rep["obstruction"] = io::to_json(ob.cocycle);
    rep["inconsistent_row"] = ob.inconsistent_row;
  }
  if (std::holds_alternative<NotPreserved>(restrict_endo(f, l.center()))) {
    rep["poisson_preserved"] = "center-not-preserved";
  } else {
    const auto anti = antisym_check(l, f);
    rep["poisson_preserved"] = anti.bracket_preserved;
    if (!anti.bracket_preserved)
      for (const auto& e : anti.entries)
        if (!vec_is_zero(l.field(), e.rhs)) {
          rep["bracket_mismatch"] = {{"i", e.i}, {"j", e.j}, {"difference", io::to_json(l.field(), e.rhs)}};
          break;
        }
    if (o.formally_smooth) {
      // A symmetric restricted cocycle over a formally smooth center must be a coboundary.
      rep["expected_liftable"] = anti.restricted_symmetric;
      rep["expectation_met"] = anti.restricted_symmetric == liftable;
    }
  }
  return {liftable ? kAffirmative : kNegative, rep};
}

Outcome lift_poisson(const Options& o) {
  need_files(o, 1, 1);
  const auto l = io::parse_flat_lift(io::read_json_file(o.files[0]));
  const auto pc = poisson_center(l);
  const auto ax = check_poisson_axioms(l);
  Json table = Json::array();
  for (std::size_t i = 0; i < pc.table.size(); ++i)
    for (std::size_t j = i + 1; j < pc.table[i].size(); ++j)
      table.push_back({{"i", i}, {"j", j}, {"bracket", io::to_json(l.field(), pc.table[i][j])}});
  Json rep{{"center_dim", pc.center.dim()},
           {"center_basis", basis_json(l.field(), pc.center)},
           {"table", std::move(table)},
           {"axioms",
            {{"antisymmetric", ax.antisymmetric}, {"jacobi", ax.jacobi}, {"leibniz", ax.leibniz}, {"closed", ax.closed}}}};
  return {ax.all() ? kAffirmative : kNegative, rep};
}

Outcome lift_antisym(const Options& o) {
  need_files(o, 2, 2);
  const auto l = io::parse_flat_lift(io::read_json_file(o.files[0]));
  const auto f = read_endo(l.field(), o.files[1], l.dim());
  const auto r = antisym_check(l, f);
  return {r.bracket_preserved ? kAffirmative : kNegative, antisym_json(l, r)};
}

// ---- azumaya -------------------------------------------------------------

Outcome azumaya_check_cmd(const Options& o) {
  need_files(o, 1, 1);
  const auto a = io::parse_field_algebra(io::read_json_file(o.files[0]));
  const auto r = azumaya_check(a);
  Json blocks = nullptr;
  if (r.blocks) {
    blocks = Json::array();
    for (const auto& b : *r.blocks) blocks.push_back({{"algebra_dim", b.algebra_dim}, {"center_dim", b.center_dim}});
  }
  Json rep{{"separable_over_center", r.separable_over_center},
           {"center_dim", r.center_dim},
           {"blocks", blocks},
           {"constant_rank", r.constant_rank ? Json(*r.constant_rank) : Json(nullptr)}};
  return {r.separable_over_center ? kAffirmative : kNegative, rep};
}

Outcome azumaya_center_preserved(const Options& o) {
  need_files(o, 2, 2);
  const auto a = io::parse_field_algebra(io::read_json_file(o.files[0]));
  const auto f = read_endo(a.ring(), o.files[1], a.dim());
  const auto r = center_preserved(a, f);
  Json rep{{"preserved", r.preserved},
           {"witness", r.witness ? io::to_json(a.ring(), *r.witness) : Json(nullptr)},
           {"image", r.image ? io::to_json(a.ring(), *r.image) : Json(nullptr)}};
  return {r.preserved ? kAffirmative : kNegative, rep};
}

Outcome azumaya_separability(const Options& o) {
  need_files(o, 1, 1);
  const auto a = io::parse_field_algebra(io::read_json_file(o.files[0]));
  const auto z = o.over_ground_field ? Subspace::span(a.ring(), a.dim(), {a.unit()}) : center(a);
  const auto r = separability_element(a, z);
  Json rep{{"over", o.over_ground_field ? "ground_field" : "center"}, {"envelope_dim", r.envelope_dim}};
  if (r.element) {
    Json terms = Json::array();
    for (const auto& t : r.element->terms)
      terms.push_back({{"left", t.left}, {"right", t.right}, {"coeff", io::to_json(a.ring(), t.coeff)}});
    rep["found"] = true;
    rep["element"] = std::move(terms);
    rep["inconsistent_row"] = nullptr;
    return {kAffirmative, rep};
  }
  rep["found"] = false;
  rep["element"] = nullptr;
  rep["inconsistent_row"] = *r.inconsistent_row;
  return {kNegative, rep};
}

// ---- weyl ----------------------------------------------------------------

Json relation_json(const RelationFailure& r, unsigned n) {
  auto name = [n](unsigned g) { return (g < n ? "x" : "d") + std::to_string(g % n + 1); };
  return {{"relation", "[f(" + name(r.g1) + "), f(" + name(r.g2) + ")]"},
          {"residual", io::to_json(r.residual)},
          {"residual_text", r.residual.to_string()}};
}

Outcome weyl_endo_check(const Options& o) {
  need_files(o, 1, 1);
  const auto f = io::parse_weyl_endo(io::read_json_file(o.files[0]));
  const auto failure = first_failed_relation(f);
  return {failure ? kNegative : kAffirmative,
          {{"valid", !failure}, {"failed_relation", failure ? relation_json(*failure, f.n()) : Json(nullptr)}}};
}

Json center_images_json(const WeylPoissonReport& r) {
  Json out = Json::array();
  for (const auto& c : r.images) out.push_back(io::to_json(c));
  return out;
}

Outcome weyl_decide(const Options& o) {
  need_files(o, 1, 1);
  const auto f = io::parse_weyl_endo(io::read_json_file(o.files[0]));
  const auto r = poisson_check(f);
  Json rep{{"liftable", r.preserved}, {"poisson_preserved", r.preserved}, {"center_images", center_images_json(r)}};
  rep["mismatch"] = r.mismatch ? Json{{"u", r.mismatch->u},
                                      {"v", r.mismatch->v},
                                      {"lhs", io::to_json(r.mismatch->lhs)},
                                      {"rhs", io::to_json(r.mismatch->rhs)}}
                               : Json(nullptr);
  return {r.preserved ? kAffirmative : kNegative, rep};
}

Outcome weyl_lift(const Options& o) {
  need_files(o, 1, 1);
  const auto f = io::parse_weyl_endo(io::read_json_file(o.files[0]));
  const bool decided = decide_weyl_lift(f);
  const auto res = search_lift(f, o.degree_bound);
  Json rep{{"degree_bound", o.degree_bound}, {"decide_weyl_lift", decided}};
  if (const auto* lift = std::get_if<WeylLift>(&res)) {
    Json corrections = Json::array();
    for (const auto& u : lift->corrections) corrections.push_back(io::to_json(u));
    rep["found"] = true;
    rep["verified"] = !first_failed_relation(lift->lifted).has_value();
    rep["lift"] = io::to_json(lift->lifted);
    rep["corrections"] = std::move(corrections);
    return {kAffirmative, rep};
  }
  rep["found"] = false;
  rep["inconsistent_row"] = std::get<NotFoundWithinBound>(res).inconsistent_row;
  rep["note"] = decided ? "no lift within the degree bound; the Poisson criterion says a lift exists"
                        : "no lift exists: the Poisson bracket on the center is not preserved";
  return {kNegative, rep};
}

Outcome weyl_bracket_constants(const Options& o) {
  if (o.p == 0) fail(ErrorKind::ParseError, "--p is required");
  if (o.n == 0) fail(ErrorKind::ParseError, "--n must be positive");
  return {kAffirmative, {{"p", o.p}, {"n", o.n}, {"table", bracket_constants(o.p, o.n)}}};
}

Outcome selftest(const Options& o) {
  auto rep = run_selftest(o.seed);
  return {rep["all_passed"].get<bool>() ? kAffirmative : kNegative, rep};
}

void render_text(std::ostream& out, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(out, v, prefix.empty() ? k : prefix + "." + k);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_object(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(out, j[i], prefix + "[" + std::to_string(i) + "]");
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hochschild obstructions to lifting algebra endomorphisms", "hochlift"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "RNG seed for property commands")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--degree-bound", o.degree_bound, "Total degree bound for Weyl lift search")->capture_default_str();
  app.add_flag("--assert-formally-smooth", o.formally_smooth, "Assert that the center is formally smooth");

  std::function<Outcome(const Options&)> handler;
  auto group = [&](const std::string& name, const std::string& help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Outcome (*fn)(const Options&)) {
    auto* s = parent->add_subcommand(name, help);
    s->add_option("files", o.files, "Input JSON files");
    s->callback([&handler, fn] { handler = fn; });
    return s;
  };

  auto* alg = group("algebra", "Structure-constant algebras");
  leaf(alg, "validate", "Associativity, unit and commutativity", algebra_validate);
  leaf(alg, "center", "Basis of the center", algebra_center);
  auto* hh = group("hochschild", "Hochschild cochains with twisted coefficients");
  leaf(hh, "dim", "HH^0..HH^2 dimensions: <algebra> [endo]", hochschild_dim);
  leaf(hh, "cocycle-check", "Is the cochain a cocycle: <algebra> <cochain> [endo]", hochschild_cocycle);
  leaf(hh, "solve", "Solve delta h = c: <algebra> <cochain> [endo]", hochschild_solve);
  auto* lift = group("lift", "First-order lifts of endomorphisms");
  leaf(lift, "decide", "Lift decision: <flat-lift> <endo>", lift_decide);
  leaf(lift, "poisson", "Poisson bracket on the center: <flat-lift>", lift_poisson);
  leaf(lift, "antisym", "Antisymmetrization identity: <flat-lift> <endo>", lift_antisym);
  auto* az = group("azumaya", "Separability and center preservation");
  leaf(az, "check", "Separability over the center and block ranks: <algebra>", azumaya_check_cmd);
  leaf(az, "center-preserved", "Does f map the center into itself: <algebra> <endo>", azumaya_center_preserved);
  leaf(az, "separability", "Separability element: <algebra>", azumaya_separability)
      ->add_flag("--over-ground-field", o.over_ground_field, "Use k.1 instead of the center");
  auto* weyl = group("weyl", "Weyl algebras in characteristic p");
  leaf(weyl, "endo-check", "Check the Weyl relations: <endo>", weyl_endo_check);
  leaf(weyl, "decide", "Poisson-preservation lift decision: <endo>", weyl_decide);
  leaf(weyl, "lift", "Bounded-degree lift search over Z/p^2: <endo>", weyl_lift);
  auto* bc = leaf(weyl, "bracket-constants", "Brackets of p-th powers", weyl_bracket_constants);
  bc->add_option("--p", o.p, "Characteristic")->required();
  bc->add_option("--n", o.n, "Number of generator pairs")->capture_default_str();
  auto* st = app.add_subcommand("selftest", "Run the invariant suites");
  st->callback([&handler] { handler = selftest; });

  auto emit = [&](const Json& j) {
    if (o.format == "text") render_text(out, j, "");
    else out << j.dump(2) << '\n';
  };
  auto error = [&](const std::string& kind, const std::string& detail) {
    emit(Json{{"error", {{"kind", kind}, {"detail", detail}}}});
    return kInputError;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kAffirmative;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kAffirmative;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return error("UsageError", e.what());
  } catch (const Error& e) {
    return error(std::string(to_string(e.kind())), e.what());
  }
  if (!handler) return error("UsageError", "no command given");
  try {
    const auto outcome = handler(o);
    emit(outcome.report);
    return outcome.code;
  } catch (const Error& e) {
    return error(std::string(to_string(e.kind())), e.what());
  } catch (const nlohmann::json::exception& e) {
    return error("ParseError", e.what());
  }
}

}  // namespace hochlift::cli
