// Writes the bundled example files: gen_corpus <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hochlift/corpus.hpp"
#include "hochlift_cli/io.hpp"

namespace fs = std::filesystem;
using namespace hochlift;
using io::Json;

namespace {

void write(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

Json weyl_identity(std::uint64_t p) {
  WeylEndo f;
  f.images_x = {WeylElem::x(1, p, false, 0)};
  f.images_d = {WeylElem::d(1, p, false, 0)};
  return io::to_json(f);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_corpus <output-dir>\n";
    return 2;
  }
  const fs::path dir(argv[1]);
  fs::create_directories(dir / "corpus");

  write(dir / "mat2_f3.json", io::to_json(mat2_f3_lift()));
  write(dir / "conj.json", io::to_json(mat2_f3_conjugation()));
  write(dir / "logsymp_5_2_3.json", io::to_json(logsymp_5_2_3()));
  write(dir / "y_to_ysq.json", io::to_json(y_to_ysq()));
  write(dir / "p2_example.json", io::to_json(p2_weyl_example()));
  write(dir / "weyl_identity_f5.json", weyl_identity(5));
  {
    WeylEndo bad;
    bad.images_x = {WeylElem::x(1, 5, false, 0)};
    bad.images_d = {WeylElem::d(1, 5, false, 0).scaled(2)};
    write(dir / "weyl_not_endo_f5.json", io::to_json(bad));
  }
  write(dir / "f4_times_mat2f4.json", io::to_json(f4_times_mat2f4()));
  write(dir / "f4_diag_frobenius.json", io::to_json(f4_diag_frobenius()));
  write(dir / "mat2_f3_algebra.json", io::to_json(mat2_f3_lift().base()));
  write(dir / "dual_numbers_f2.json", io::to_json(truncated_polynomial(Field::prime(2), {2}).algebra));
  {
    const auto l = logsymp_5_2_3();
    const auto c = defect_cocycle(l, y_to_ysq(), default_linear_lift(l, y_to_ysq()));
    write(dir / "logsymp_5_2_3_base.json", io::to_json(l.base()));
    write(dir / "logsymp_obstruction.json", io::to_json(c));
  }

  for (const auto& nl : lift_corpus()) {
    write(dir / "corpus" / (nl.name + ".json"), io::to_json(nl.lift));
    for (const auto& m : nl.morphisms) write(dir / "corpus" / (nl.name + "__" + m.name + ".json"), io::to_json(m.matrix));
  }
  for (const auto& na : center_corpus()) {
    write(dir / "corpus" / (na.name + "__algebra.json"), io::to_json(na.algebra));
    for (const auto& m : na.morphisms) write(dir / "corpus" / (na.name + "__" + m.name + ".json"), io::to_json(m.matrix));
  }

  std::ofstream transcript(dir / "bracket_constants.txt");
  transcript << "# pinv([x^p, d^p]) and pinv([d^p, x^p]) in A_1(Z/p^2), computed by normal ordering\n";
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const auto t = bracket_constants(p, 1);
    const auto x = WeylElem::x(1, p, true, 0), d = WeylElem::d(1, p, true, 0);
    const auto comm = commutator(weyl_pow(d, p), weyl_pow(x, p));
    transcript << "p=" << p << "  [d^p, x^p] = " << comm.to_string() << "  {X,D} = " << t[0][1] << "  {D,X} = " << t[1][0]
               << '\n';
  }
  std::cout << "wrote " << dir.string() << '\n';
  return 0;
}
