#pragma once
// JSON form of polynomial fields:
//   [{"component": 0, "monomials": [{"exps": [i,j,k], "coeff": c}, ...]}, ...]
// Components not listed are zero. Matrix fields use component = 3*row + col.

#include <json.hpp>

#include "cstress/poly.hpp"

namespace cstress {

nlohmann::json to_json(const Poly3& p);
Poly3 poly_from_json(const nlohmann::json& j, int cap = kDefaultDegreeCap);

nlohmann::json to_json(const PolyVecField& u);
PolyVecField vec_field_from_json(const nlohmann::json& j, int cap = kDefaultDegreeCap);

nlohmann::json to_json(const PolyMatField& P);
PolyMatField mat_field_from_json(const nlohmann::json& j, int cap = kDefaultDegreeCap);

}  // namespace cstress
