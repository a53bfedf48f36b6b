#pragma once

// JSON wire format for fields, rings, algebras, maps, cochains, flat lifts
// and Weyl elements.

#include <string>

#include "hochlift/hochschild.hpp"
#include "hochlift/liftkit.hpp"
#include "hochlift/weyl.hpp"
#include "json.hpp"

namespace hochlift::io {

using Json = nlohmann::json;

/// Reads and parses a file; ParseError on failure.
Json read_json_file(const std::string& path);

Field parse_field(const Json& j);
Json to_json(const Field& k);
TruncRing parse_ring(const Json& j);
Json to_json(const TruncRing& r);

FieldElem parse_elem(const Field& k, const Json& j);
Json to_json(const Field& k, FieldElem a);
RingElem parse_elem(const TruncRing& r, const Json& j);
Json to_json(const TruncRing& r, RingElem a);

Json to_json(const Field& k, const FVec& v);
Json to_json(const TruncRing& r, const RVec& v);

/// {"dim", "coeffs": {"field": ..} | {"ring": ..}, "unit", "sc"}.
bool is_ring_algebra(const Json& j);
FAlgebra parse_field_algebra(const Json& j);
RAlgebra parse_ring_algebra(const Json& j);
Json to_json(const FAlgebra& a);
Json to_json(const RAlgebra& a);

/// {"matrix": [[..]]}, column j = image of e_j.
FMatrix parse_matrix(const Field& k, const Json& j, std::size_t dim);
Json to_json(const FMatrix& m);
Json to_json(const RMatrix& m);

/// {"degree", "tensor": [{"idx", "val"}]}; zero entries omitted.
Cochain parse_cochain(const Field& k, const Json& j, std::size_t source_dim, std::size_t module_dim);
Json to_json(const Cochain& c);

/// {"base": <algebra>, "lift": <algebra over a ring>}.
FlatLift parse_flat_lift(const Json& j);
Json to_json(const FlatLift& l);

/// {"n", "p", "terms": [{"x", "d", "c"}], "modulus"?}; modulus p^2 marks a lift.
WeylElem parse_weyl(const Json& j);
Json to_json(const WeylElem& w);
/// {"images_x": [..], "images_d": [..]}.
WeylEndo parse_weyl_endo(const Json& j);
Json to_json(const WeylEndo& f);
Json to_json(const CenterPoly& c);

}  // namespace hochlift::io
