#include "hochlift_cli/io.hpp"

#include <fstream>

namespace hochlift::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorKind::ParseError, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t as_index(const Json& j, std::size_t bound, const char* what) {
  const auto v = as_int(j, what);
  if (v < 0 || static_cast<std::uint64_t>(v) >= bound) bad(std::string(what) + " out of range");
  return static_cast<std::size_t>(v);
}

template <class Ring>
Algebra<Ring> parse_algebra_over(const Ring& ring, const Json& j) {
  const auto dim = static_cast<std::size_t>(as_int(field_of(j, "dim"), "dim"));
  if (dim == 0 || dim > 64) bad("dim must lie in 1..64");
  const auto& unit_j = field_of(j, "unit");
  if (!unit_j.is_array() || unit_j.size() != dim) bad("unit must have dim entries");
  Vec<Ring> unit;
  for (const auto& e : unit_j) unit.push_back(parse_elem(ring, e));
  std::vector<SparseVec<Ring>> products(dim * dim);
  const auto& sc = field_of(j, "sc");
  if (!sc.is_array()) bad("sc must be an array");
  for (const auto& entry : sc) {
    const auto i = as_index(field_of(entry, "i"), dim, "sc.i");
    const auto jj = as_index(field_of(entry, "j"), dim, "sc.j");
    const auto& val = field_of(entry, "val");
    if (!val.is_array()) bad("sc.val must be an array");
    auto& slot = products[i * dim + jj];
    for (const auto& kc : val) {
      if (!kc.is_array() || kc.size() != 2) bad("sc.val entries are [k, coeff] pairs");
      const auto k = as_index(kc[0], dim, "sc.val index");
      const auto c = parse_elem(ring, kc[1]);
      bool merged = false;
      for (auto& [kk, cc] : slot)
        if (kk == k) {
          cc = ring.add(cc, c);
          merged = true;
        }
      if (!merged) slot.emplace_back(k, c);
    }
  }
  return Algebra<Ring>(ring, dim, std::move(products), std::move(unit));
}

template <class Ring>
Json algebra_json(const Algebra<Ring>& a, Json coeffs) {
  Json sc = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      auto sv = a.product(i, j);
      if (sv.empty()) continue;
      std::sort(sv.begin(), sv.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      Json val = Json::array();
      for (const auto& [k, c] : sv) val.push_back({k, to_json(a.ring(), c)});
      sc.push_back({{"i", i}, {"j", j}, {"val", std::move(val)}});
    }
  return {{"dim", a.dim()}, {"coeffs", std::move(coeffs)}, {"unit", to_json(a.ring(), a.unit())}, {"sc", std::move(sc)}};
}

template <class Ring>
Json matrix_json(const Matrix<Ring>& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m.ring(), m(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"matrix", std::move(rows)}};
}

std::vector<std::uint32_t> exponents(const Json& j, unsigned n, const char* what) {
  if (!j.is_array() || j.size() != n) bad(std::string(what) + " must have n exponents");
  std::vector<std::uint32_t> out;
  for (const auto& e : j) {
    const auto v = as_int(e, what);
    if (v < 0 || v > 100000) bad(std::string(what) + " exponent out of range");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  return out;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    bad(path + ": " + e.what());
  }
}

Field parse_field(const Json& j) {
  const auto p = as_int(field_of(j, "p"), "p");
  if (p < 2) bad("p must be a prime");
  const auto m = j.contains("m") ? as_int(j.at("m"), "m") : 1;
  if (m == 1 && !j.contains("modulus")) return Field::prime(static_cast<std::uint64_t>(p));
  const auto& mod = field_of(j, "modulus");
  if (!mod.is_array()) bad("modulus must be a coefficient list");
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : mod) {
    const auto v = as_int(c, "modulus coefficient");
    if (v < 0 || v >= p) bad("modulus coefficients lie in [0, p)");
    coeffs.push_back(static_cast<std::uint64_t>(v));
  }
  if (static_cast<std::int64_t>(coeffs.size()) != m + 1) bad("modulus must have m + 1 coefficients");
  return Field::extension(static_cast<std::uint64_t>(p), coeffs);
}

Json to_json(const Field& k) {
  if (k.degree() == 1) return {{"p", k.characteristic()}};
  return {{"p", k.characteristic()}, {"m", k.degree()}, {"modulus", k.modulus()}};
}

TruncRing parse_ring(const Json& j) {
  const auto& kind = field_of(j, "kind");
  if (kind == "zp2") {
    const auto p = as_int(field_of(j, "p"), "p");
    if (p < 2) bad("p must be a prime");
    return TruncRing::zp_squared(static_cast<std::uint64_t>(p));
  }
  if (kind == "dual") return TruncRing::dual(parse_field(field_of(j, "field")));
  bad("ring kind must be \"zp2\" or \"dual\"");
}

Json to_json(const TruncRing& r) {
  if (r.kind() == TruncRing::Kind::ZpSquared) return {{"kind", "zp2"}, {"p", r.residue_field().characteristic()}};
  return {{"kind", "dual"}, {"field", to_json(r.residue_field())}};
}

FieldElem parse_elem(const Field& k, const Json& j) {
  if (j.is_number_integer()) {
    if (k.degree() != 1) bad("elements of F_q with q > p are coordinate arrays");
    return k.from_int(j.get<std::int64_t>());
  }
  if (!j.is_array() || j.size() != k.degree()) bad("field element must have m coordinates");
  std::vector<std::uint64_t> coords;
  for (const auto& c : j) coords.push_back(static_cast<std::uint64_t>(k.from_int(as_int(c, "coordinate")).code));
  return k.from_coords(coords);
}

Json to_json(const Field& k, FieldElem a) {
  if (k.degree() == 1) return a.code;
  return k.coords(a);
}

RingElem parse_elem(const TruncRing& r, const Json& j) {
  if (r.kind() == TruncRing::Kind::ZpSquared) {
    const auto p = static_cast<std::int64_t>(r.residue_field().characteristic());
    const auto v = as_int(j, "Z/p^2 element");
    return r.from_zp2_value(static_cast<std::uint64_t>(((v % (p * p)) + p * p) % (p * p)));
  }
  if (!j.is_array() || j.size() != 2) bad("dual-number element is [a0, a1]");
  const auto& k = r.residue_field();
  return {parse_elem(k, j[0]), parse_elem(k, j[1])};
}

Json to_json(const TruncRing& r, RingElem a) {
  if (r.kind() == TruncRing::Kind::ZpSquared) return r.zp2_value(a);
  const auto& k = r.residue_field();
  return Json::array({to_json(k, a.lo), to_json(k, a.hi)});
}

Json to_json(const Field& k, const FVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(k, x));
  return out;
}

Json to_json(const TruncRing& r, const RVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(r, x));
  return out;
}

bool is_ring_algebra(const Json& j) { return field_of(j, "coeffs").contains("ring"); }

FAlgebra parse_field_algebra(const Json& j) {
  const auto& coeffs = field_of(j, "coeffs");
  if (!coeffs.contains("field")) bad("expected an algebra over a field");
  return parse_algebra_over(parse_field(coeffs.at("field")), j);
}

RAlgebra parse_ring_algebra(const Json& j) {
  const auto& coeffs = field_of(j, "coeffs");
  if (!coeffs.contains("ring")) bad("expected an algebra over a truncation ring");
  return parse_algebra_over(parse_ring(coeffs.at("ring")), j);
}

Json to_json(const FAlgebra& a) { return algebra_json(a, {{"field", to_json(a.ring())}}); }
Json to_json(const RAlgebra& a) { return algebra_json(a, {{"ring", to_json(a.ring())}}); }

FMatrix parse_matrix(const Field& k, const Json& j, std::size_t dim) {
  const auto& rows = field_of(j, "matrix");
  if (!rows.is_array() || rows.size() != dim) bad("matrix must have dim rows");
  FMatrix m(k, dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim) bad("matrix rows must have dim entries");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_elem(k, rows[r][c]);
  }
  return m;
}

Json to_json(const FMatrix& m) { return matrix_json(m); }
Json to_json(const RMatrix& m) { return matrix_json(m); }

Cochain parse_cochain(const Field& k, const Json& j, std::size_t source_dim, std::size_t module_dim) {
  const auto degree = as_int(field_of(j, "degree"), "degree");
  if (degree < 0 || degree > 3) bad("cochain degree must lie in 0..3");
  Cochain c(k, static_cast<unsigned>(degree), source_dim, module_dim);
  const auto& tensor = field_of(j, "tensor");
  if (!tensor.is_array()) bad("tensor must be an array");
  for (const auto& entry : tensor) {
    const auto& idx_j = field_of(entry, "idx");
    if (!idx_j.is_array() || idx_j.size() != static_cast<std::size_t>(degree)) bad("idx length must equal the degree");
    std::vector<std::size_t> idx;
    for (const auto& i : idx_j) idx.push_back(as_index(i, source_dim, "idx"));
    const auto& val = field_of(entry, "val");
    if (!val.is_array() || val.size() != module_dim) bad("val must have dim(M) entries");
    auto slot = c.at(idx);
    for (std::size_t t = 0; t < module_dim; ++t) slot[t] = k.add(slot[t], parse_elem(k, val[t]));
  }
  return c;
}

Json to_json(const Cochain& c) {
  Json tensor = Json::array();
  const auto& k = c.field();
  for (std::size_t t = 0; t < c.tuple_count(); ++t) {
    const auto val = c.at_flat(t);
    if (std::all_of(val.begin(), val.end(), [&](FieldElem x) { return k.is_zero(x); })) continue;
    Json idx = Json::array();
    std::vector<std::size_t> digits(c.degree());
    std::size_t rest = t;
    for (unsigned d = c.degree(); d-- > 0;) {
      digits[d] = rest % c.source_dim();
      rest /= c.source_dim();
    }
    for (auto d : digits) idx.push_back(d);
    tensor.push_back({{"idx", std::move(idx)}, {"val", to_json(k, FVec(val.begin(), val.end()))}});
  }
  return {{"degree", c.degree()}, {"tensor", std::move(tensor)}};
}

FlatLift parse_flat_lift(const Json& j) {
  return FlatLift(parse_field_algebra(field_of(j, "base")), parse_ring_algebra(field_of(j, "lift")));
}

Json to_json(const FlatLift& l) { return {{"base", to_json(l.base())}, {"lift", to_json(l.lift())}}; }

WeylElem parse_weyl(const Json& j) {
  const auto n = as_int(field_of(j, "n"), "n");
  const auto p = as_int(field_of(j, "p"), "p");
  if (n < 1 || n > 8) bad("n must lie in 1..8");
  if (p < 2) bad("p must be a prime");
  bool lifted = false;
  if (j.contains("modulus")) {
    const auto mod = as_int(j.at("modulus"), "modulus");
    if (mod == p * p) lifted = true;
    else if (mod != p) bad("modulus must be p or p^2");
  }
  WeylElem w(static_cast<unsigned>(n), static_cast<std::uint64_t>(p), lifted);
  const auto& terms = field_of(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) {
    auto m = exponents(field_of(t, "x"), static_cast<unsigned>(n), "x");
    const auto dexp = exponents(field_of(t, "d"), static_cast<unsigned>(n), "d");
    m.insert(m.end(), dexp.begin(), dexp.end());
    w.add_term(m, as_int(field_of(t, "c"), "c"));
  }
  return w;
}

Json to_json(const WeylElem& w) {
  Json terms = Json::array();
  for (const auto& [m, c] : w.terms()) {
    const auto half = m.begin() + w.n();
    terms.push_back({{"x", std::vector<std::uint32_t>(m.begin(), half)},
                     {"d", std::vector<std::uint32_t>(half, m.end())},
                     {"c", c}});
  }
  Json out{{"n", w.n()}, {"p", w.p()}, {"terms", std::move(terms)}};
  if (w.lifted()) out["modulus"] = w.modulus();
  return out;
}

WeylEndo parse_weyl_endo(const Json& j) {
  WeylEndo f;
  const auto& xs = field_of(j, "images_x");
  const auto& ds = field_of(j, "images_d");
  if (!xs.is_array() || !ds.is_array()) bad("images_x and images_d must be arrays");
  for (const auto& e : xs) f.images_x.push_back(parse_weyl(e));
  for (const auto& e : ds) f.images_d.push_back(parse_weyl(e));
  f.check_signature();
  return f;
}

Json to_json(const WeylEndo& f) {
  Json xs = Json::array(), ds = Json::array();
  for (const auto& w : f.images_x) xs.push_back(to_json(w));
  for (const auto& w : f.images_d) ds.push_back(to_json(w));
  return {{"images_x", std::move(xs)}, {"images_d", std::move(ds)}};
}

Json to_json(const CenterPoly& c) {
  Json terms = Json::array();
  for (const auto& [m, coeff] : c.terms) {
    const auto half = m.begin() + c.n;
    terms.push_back({{"X", std::vector<std::uint32_t>(m.begin(), half)},
                     {"D", std::vector<std::uint32_t>(half, m.end())},
                     {"c", coeff}});
  }
  return {{"text", c.to_string()}, {"terms", std::move(terms)}};
}

}  // namespace hochlift::io
