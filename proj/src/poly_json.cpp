#include "cstress/poly_json.hpp"

namespace cstress {

using nlohmann::json;

json to_json(const Poly3& p) {
  json mons = json::array();
  for (const auto& [e, c] : p.terms()) mons.push_back({{"exps", {e[0], e[1], e[2]}}, {"coeff", c}});
  return mons;
}

Poly3 poly_from_json(const json& mons, int cap) {
  if (!mons.is_array()) throw std::invalid_argument("monomials must be an array");
  Poly3 p(0.0, cap);
  for (const auto& m : mons) {
    const auto& ex = m.at("exps");
    if (!ex.is_array() || ex.size() != 3) throw std::invalid_argument("exps must hold three integers");
    p.add_term({ex[0].get<int>(), ex[1].get<int>(), ex[2].get<int>()}, m.at("coeff").get<double>());
  }
  return p;
}

namespace {

template <size_t N, class Get>
json components_to_json(Get get) {
  json out = json::array();
  for (size_t c = 0; c < N; ++c) {
    const Poly3& p = get(c);
    if (p.is_zero()) continue;
    out.push_back({{"component", c}, {"monomials", to_json(p)}});
  }
  return out;
}

template <size_t N, class Set>
void components_from_json(const json& j, int cap, Set set) {
  if (!j.is_array()) throw std::invalid_argument("field must be an array of components");
  for (const auto& item : j) {
    int c = item.at("component").get<int>();
    if (c < 0 || c >= static_cast<int>(N)) throw std::invalid_argument("component index out of range");
    set(c, poly_from_json(item.at("monomials"), cap));
  }
}

}  // namespace

json to_json(const PolyVecField& u) {
  return components_to_json<3>([&](size_t c) -> const Poly3& { return u[static_cast<int>(c)]; });
}

PolyVecField vec_field_from_json(const json& j, int cap) {
  PolyVecField u;
  for (auto& p : u.c) p = Poly3(0.0, cap);
  components_from_json<3>(j, cap, [&](int c, Poly3 p) { u[c] += p; });
  return u;
}

json to_json(const PolyMatField& P) {
  return components_to_json<9>([&](size_t c) -> const Poly3& { return P(static_cast<int>(c) / 3, c % 3); });
}

PolyMatField mat_field_from_json(const json& j, int cap) {
  PolyMatField P;
  components_from_json<9>(j, cap, [&](int c, Poly3 p) { P(c / 3, c % 3) += p; });
  return P;
}

}  // namespace cstress
