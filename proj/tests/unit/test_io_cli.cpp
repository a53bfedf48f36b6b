#include <sstream>

#include "doctest.h"
#include "hochlift/corpus.hpp"
#include "hochlift_cli/cli.hpp"
#include "hochlift_cli/io.hpp"
#include "hochlift_cli/selftest.hpp"

using namespace hochlift;
using io::Json;

namespace {

const std::string kData = HOCHLIFT_DATA_DIR;

struct Outcome {
  int code;
  Json report;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  Json j;
  try {
    j = Json::parse(out.str());
  } catch (const Json::exception&) {
  }
  return {code, j};
}

}  // namespace

TEST_CASE("field and ring JSON round trips") {
  const auto f4 = Field::extension(2, {1, 1, 1});
  CHECK(io::parse_field(io::to_json(f4)).describe() == f4.describe());
  const auto r = TruncRing::dual(Field::prime(3));
  CHECK(io::parse_ring(io::to_json(r)).describe() == r.describe());
  for (auto a : f4.elements()) CHECK(io::parse_elem(f4, io::to_json(f4, a)) == a);
  const auto z9 = TruncRing::zp_squared(3);
  CHECK(io::parse_elem(z9, io::to_json(z9, z9.from_int(7))) == z9.from_int(7));
  CHECK_THROWS_AS(io::parse_field(Json::parse(R"({"p": 6})")), Error);
  CHECK_THROWS_AS(io::parse_field(Json::parse(R"({"q": 3})")), Error);
}

TEST_CASE("algebra, lift, cochain and Weyl round trips") {
  const auto l = mat2_f3_lift();
  const auto back = io::parse_flat_lift(io::to_json(l));
  CHECK(back.base().products() == l.base().products());
  CHECK(back.lift().products() == l.lift().products());
  const auto f = f4_times_mat2f4();
  CHECK(io::parse_field_algebra(io::to_json(f)).products() == f.products());
  Rng rng(3);
  const auto c = random_cochain(rng, Field::prime(5), 2, 3, 2);
  CHECK(io::parse_cochain(Field::prime(5), io::to_json(c), 3, 2).data() == c.data());
  const auto w = random_weyl(rng, 2, 3, true, 4, 5);
  CHECK(io::parse_weyl(io::to_json(w)) == w);
  const auto e = p2_weyl_example();
  const auto eb = io::parse_weyl_endo(io::to_json(e));
  CHECK(eb.images_d == e.images_d);
  try {
    io::parse_field_algebra(Json::parse(R"({"dim": 2})"));
    FAIL("expected ParseError");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::ParseError);
  }
}

TEST_CASE("CLI exit codes on the bundled data") {
  auto r = run_cli({"lift", "decide", kData + "/mat2_f3.json", kData + "/conj.json"});
  CHECK(r.code == cli::kAffirmative);
  CHECK(r.report["liftable"] == true);
  r = run_cli({"lift", "decide", kData + "/logsymp_5_2_3.json", kData + "/y_to_ysq.json"});
  CHECK(r.code == cli::kNegative);
  CHECK(r.report["liftable"] == false);
  r = run_cli({"weyl", "decide", kData + "/p2_example.json"});
  CHECK(r.code == cli::kAffirmative);
  r = run_cli({"weyl", "endo-check", kData + "/weyl_not_endo_f5.json"});
  CHECK(r.code == cli::kNegative);
  r = run_cli({"azumaya", "center-preserved", kData + "/f4_times_mat2f4.json", kData + "/f4_diag_frobenius.json"});
  CHECK(r.code == cli::kNegative);
  r = run_cli({"weyl", "bracket-constants", "--p", "3", "--n", "1"});
  CHECK(r.code == cli::kAffirmative);
}

TEST_CASE("CLI error reporting") {
  auto r = run_cli({"lift", "decide", kData + "/does_not_exist.json", kData + "/conj.json"});
  CHECK(r.code == cli::kInputError);
  CHECK(r.report["error"]["kind"] == "ParseError");
  r = run_cli({"frobnicate"});
  CHECK(r.code == cli::kInputError);
  r = run_cli({"lift", "decide", kData + "/mat2_f3.json", kData + "/y_to_ysq.json"});
  CHECK(r.code == cli::kInputError);
  CHECK(r.report.contains("error"));
}

TEST_CASE("selftest is deterministic and passes") {
  const auto a = cli::run_selftest(7);
  CHECK(a["all_passed"] == true);
  CHECK(a == cli::run_selftest(7));
}
