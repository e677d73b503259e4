#include "cstress/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cstress/conformal.hpp"
#include "cstress/energy.hpp"
#include "cstress/identities.hpp"
#include "cstress/lift.hpp"
#include "cstress/micromorphic.hpp"
#include "cstress/poly_json.hpp"
#include "cstress/random_fields.hpp"
#include "cstress/solver.hpp"
#include "cstress/stress.hpp"
#include "cstress/tractions.hpp"

namespace cstress::cli {

namespace {

using nlohmann::json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string config_path;
  std::uint64_t seed = 1;
  std::optional<int> trials;
  std::string out_path;
  std::string format = "json";
};

struct Result {
  json doc = json::object();
  std::string csv;  // empty: command has no csv form
  std::vector<std::string> failures;
  std::ostringstream summary;

  void contract(const std::string& name, bool ok) {
    if (!ok) failures.push_back(name);
  }
};

json vec_json(const Vec3& v) { return {v(0), v(1), v(2)}; }

std::string num(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

// ---- config --------------------------------------------------------------

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad value for '") + key + "': " + e.what());
  }
}

MaterialParams params_from(const json& cfg) {
  MaterialParams p;
  if (!cfg.contains("params")) return p;
  const json& j = cfg.at("params");
  reject_unknown(j, {"mu", "lambda", "Lc", "alpha1", "alpha2", "eta_prime", "mu_c", "kappa_plus"}, "params");
  p.mu = get_or(j, "mu", p.mu);
  p.lambda = get_or(j, "lambda", p.lambda);
  p.Lc = get_or(j, "Lc", p.Lc);
  p.alpha1 = get_or(j, "alpha1", p.alpha1);
  p.alpha2 = get_or(j, "alpha2", p.alpha2);
  p.eta_prime = get_or(j, "eta_prime", p.eta_prime);
  p.mu_c = get_or(j, "mu_c", p.mu_c);
  p.kappa_plus = get_or(j, "kappa_plus", p.kappa_plus);
  try {
    p.validate();
  } catch (const InadmissibleParams& e) {
    throw ConfigError(std::string("params: ") + e.what());
  }
  return p;
}

json params_json(const MaterialParams& p) {
  return {{"mu", p.mu},         {"lambda", p.lambda},       {"Lc", p.Lc},
          {"alpha1", p.alpha1}, {"alpha2", p.alpha2},       {"eta_prime", p.eta_prime},
          {"mu_c", p.mu_c},     {"kappa_plus", p.kappa_plus}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("malformed JSON in '" + path + "': " + e.what());
  }
}

// inline "field" or "field_file"; nullopt when neither is present
std::optional<PolyVecField> field_from(const json& cfg, int cap) {
  json spec;
  if (cfg.contains("field") && cfg.contains("field_file")) throw ConfigError("give either 'field' or 'field_file'");
  if (cfg.contains("field"))
    spec = cfg.at("field");
  else if (cfg.contains("field_file"))
    spec = read_json_file(get_or<std::string>(cfg, "field_file", ""));
  else
    return std::nullopt;
  try {
    return vec_field_from_json(spec, cap);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("field: ") + e.what());
  }
}

int degree_from(const json& cfg, int fallback) {
  int d = get_or(cfg, "degree", fallback);
  if (d < 0 || d > 6) throw ConfigError("degree must lie in [0, 6]");
  return d;
}

int trials_from(const Options& o, int fallback) {
  int t = o.trials.value_or(fallback);
  if (t < 1) throw ConfigError("--trials must be positive");
  return t;
}

// {"kind": "random", "degree": d} | {"kind": "constant", "value": [..]} | {"kind": "field", "field": ..}
PolyVecField load_from(const json& cfg, FieldRng& rng, bool allow_manufactured, bool* manufactured) {
  if (manufactured) *manufactured = false;
  json j = cfg.contains("load") ? cfg.at("load") : json{{"kind", "random"}};
  reject_unknown(j, {"kind", "degree", "value", "field"}, "load");
  const std::string kind = get_or<std::string>(j, "kind", "random");
  if (kind == "random") {
    int d = get_or(j, "degree", 2);
    if (d < 0 || d > 6) throw ConfigError("load degree must lie in [0, 6]");
    return rng.vec_field(d);
  }
  if (kind == "constant") {
    auto v = get_or<std::vector<double>>(j, "value", {1.0, 1.0, 1.0});
    if (v.size() != 3) throw ConfigError("load value needs three entries");
    return PolyVecField{{Poly3(v[0]), Poly3(v[1]), Poly3(v[2])}};
  }
  if (kind == "field") {
    if (!j.contains("field")) throw ConfigError("load kind 'field' needs 'field'");
    try {
      return vec_field_from_json(j.at("field"));
    } catch (const std::exception& e) {
      throw ConfigError(std::string("load field: ") + e.what());
    }
  }
  if (kind == "manufactured" && allow_manufactured) {
    *manufactured = true;
    return PolyVecField{};
  }
  throw ConfigError("unknown load kind '" + kind + "'");
}

// ---- verify-identities ---------------------------------------------------

struct Aggregate {
  IdentityReport worst;
  int trials = 0;
  bool pass = true;

  void add(IdentityReport r) {
    ++trials;
    pass = pass && r.pass;
    if (trials == 1 || r.discrepancy > worst.discrepancy || (!r.pass && worst.pass)) {
      const bool keep_fail = !worst.pass && r.pass && trials > 1;
      if (!keep_fail) worst = std::move(r);
    }
  }
  json to_json() const {
    json j = cstress::to_json(worst);
    j["trials"] = trials;
    j["pass"] = pass;
    return j;
  }
};

Result verify_identities(const Options& o, const json& cfg) {
  reject_unknown(cfg, {"params", "degree"}, "config");
  const MaterialParams p = params_from(cfg);
  const int deg = degree_from(cfg, 4);
  const int trials = trials_from(o, 100);
  FieldRng rng(o.seed);

  std::vector<std::pair<std::string, Aggregate>> rows{
      {"master_identity", {}},     {"nye", {}},           {"curl_transpose", {}},    {"trace_relations", {}},
      {"inc_curl", {}},            {"saint_venant_gradient", {}}, {"converse_gradient", {}},
      {"converse_nongradient", {}}, {"stress_duality", {}}};
  auto at = [&rows](const char* n) -> Aggregate& {
    for (auto& [k, v] : rows)
      if (k == n) return v;
    throw std::logic_error(n);
  };
  for (int t = 0; t < trials; ++t) {
    PolyVecField u = rng.vec_field(deg);
    PolyMatField P = rng.mat_field(deg);
    at("master_identity").add(master_identity_check(u));
    at("nye").add(nye_check(rng.antisym_field(deg)));
    at("curl_transpose").add(curl_transpose_check(u));
    at("trace_relations").add(trace_relations_check(P));
    at("inc_curl").add(inc_curl_check(P));

    IdentityReport sv;
    sv.name = "saint_venant_gradient";
    sv.discrepancy = saint_venant_inc(sym(grad(u))).max_abs_coeff();
    sv.pass = sv.discrepancy <= kIdentityTol;
    at("saint_venant_gradient").add(sv);

    ConverseResult cg = master_identity_converse(grad(u));
    cg.report.name = "converse_gradient";
    cg.report.pass = cg.is_gradient && cg.report.pass;
    at("converse_gradient").add(cg.report);

    // a single off-gradient monomial breaks the identity
    const int row = t % 3, col = (t + 1) % 3;
    Exp e{0, 0, 0};
    e[(col + 1) % 3] = 1;  // must not depend on x_col alone, else it is still a gradient
    ConverseResult cn = master_identity_converse(incompatible_field(u, row, col, e));
    IdentityReport rn;
    rn.name = "converse_nongradient";
    rn.discrepancy = cn.report.discrepancy;
    rn.pass = !cn.is_gradient && !cn.report.pass;
    at("converse_nongradient").add(rn);

    // tau~ antisymmetric, tau^ symmetric, Div(tau^ + tau~) = 0, sym m~ = sym m^
    StressState s = assemble(u.with_cap(2 * kDefaultDegreeCap), p);
    IdentityReport sd;
    sd.name = "stress_duality";
    sd.discrepancy = std::max({sym(s.tau_tilde).max_abs_coeff(), skw(s.tau_hat).max_abs_coeff(),
                               div_mat(s.tau_hat + s.tau_tilde).max_abs_coeff(),
                               (sym(s.m_tilde) - sym(s.m_hat)).max_abs_coeff()});
    sd.pass = sd.discrepancy <= kIdentityTol;
    at("stress_duality").add(sd);
  }

  Result r;
  json reports = json::array();
  for (auto& [name, agg] : rows) {
    agg.worst.name = name;
    reports.push_back(agg.to_json());
    r.contract(name, agg.pass);
    r.summary << "  " << std::left << std::setw(24) << name << (agg.pass ? "pass" : "FAIL") << "  max discrepancy "
              << agg.worst.discrepancy << "\n";
  }
  r.doc["degree"] = deg;
  r.doc["trials"] = trials;
  r.doc["params"] = params_json(p);
  r.doc["reports"] = reports;
  return r;
}

// ---- energy-table ---------------------------------------------------------

Result energy_table(const Options& o, const json& cfg) {
  reject_unknown(cfg, {"params", "degree", "field", "field_file", "models"}, "config");
  const MaterialParams p = params_from(cfg);
  const int deg = degree_from(cfg, 3);
  FieldRng rng(o.seed);
  PolyVecField u = field_from(cfg, kDefaultDegreeCap).value_or(rng.vec_field(deg)).with_cap(2 * kDefaultDegreeCap);

  std::vector<CurvatureModel> models;
  if (cfg.contains("models")) {
    const json& ms = cfg.at("models");
    if (!ms.is_array()) throw ConfigError("models must be an array");
    for (const json& m : ms) {
      reject_unknown(m, {"name", "coeffs"}, "models[]");
      try {
        models.push_back(CurvatureModel::from_name(get_or<std::string>(m, "name", ""),
                                                   get_or<std::vector<double>>(m, "coeffs", {})));
      } catch (const UnknownModel& e) {
        throw ConfigError(e.what());
      }
    }
  } else {
    for (ModelKind k : all_models()) models.push_back(representative_model(k, p));
  }

  Result r;
  json rows = json::array();
  std::ostringstream csv;
  csv << "model,coeffs,integral,max_coeff\n";
  const double lin = w_lin(u, p).integrate();
  for (const CurvatureModel& m : models) {
    Poly3 w = w_curv(u, m, p);
    json row{{"model", m.name()}, {"coeffs", m.coeffs}, {"integral", w.integrate()}, {"density", to_json(w)}};
    rows.push_back(row);
    std::string cs;
    for (std::size_t i = 0; i < m.coeffs.size(); ++i) cs += (i ? ";" : "") + num(m.coeffs[i]);
    csv << m.name() << "," << cs << "," << num(w.integrate()) << "," << num(w.max_abs_coeff()) << "\n";
    r.summary << "  " << std::left << std::setw(24) << m.name() << " integral " << w.integrate() << "\n";
  }

  FiveFormReport k = five_form_report(u, p);
  Poly3 g = w_curv(u, CurvatureModel::grioli(p.alpha1, p.eta_prime), p);
  Poly3 gi = w_curv(u, CurvatureModel::indeterminate(p.alpha1 + p.eta_prime, p.alpha1 - p.eta_prime), p);
  const double grioli_gap = (g - gi).max_abs_coeff();
  r.contract("five_form_equivalence", k.pass);
  r.contract("grioli_indeterminate", grioli_gap <= 1e-12);
  r.summary << "  five-form equivalence " << (k.pass ? "pass" : "FAIL") << " (" << k.max_discrepancy << ")\n"
            << "  Grioli vs indeterminate " << (grioli_gap <= 1e-12 ? "pass" : "FAIL") << " (" << grioli_gap << ")\n";

  r.doc["params"] = params_json(p);
  r.doc["field"] = to_json(u);
  r.doc["elastic_integral"] = lin;
  r.doc["models"] = rows;
  r.doc["five_forms"] = {{"max_discrepancy", k.max_discrepancy}, {"pass", k.pass}};
  r.doc["grioli_gap"] = grioli_gap;
  r.csv = csv.str();
  return r;
}

// ---- conformal-report -----------------------------------------------------

Result conformal_report(const Options& o, const json& cfg) {
  reject_unknown(cfg, {"params"}, "config");
  const MaterialParams p = params_from(cfg);
  const int trials = trials_from(o, 25);
  FieldRng rng(o.seed);

  Result r;
  json table = json::array();
  std::ostringstream csv;
  csv << "model,verdict,max_density_coeff,max_nonconstant_coeff,contract_ok\n";
  for (const InvarianceRow& row : invariance_report(p, trials, rng)) {
    table.push_back({{"model", row.model},
                     {"verdict", to_string(row.verdict)},
                     {"max_density_coeff", row.max_density_coeff},
                     {"max_nonconstant_coeff", row.max_nonconstant_coeff},
                     {"contract_ok", row.contract_ok}});
    csv << row.model << "," << to_string(row.verdict) << "," << num(row.max_density_coeff) << ","
        << num(row.max_nonconstant_coeff) << "," << (row.contract_ok ? "true" : "false") << "\n";
    r.contract("classification:" + row.model, row.contract_ok);
    if (row.model == model_name(ModelKind::ModifiedConformal))
      r.contract("modified_conformal_invariant", row.verdict == InvarianceVerdict::Invariant);
    r.summary << "  " << std::left << std::setw(24) << row.model << to_string(row.verdict)
              << (row.contract_ok ? "" : "  [contract violated]") << "\n";
  }

  ConformalRelationsReport rel;
  ConformalInvariantsReport inv;
  for (int t = 0; t < trials; ++t) {
    ConformalParams c = ConformalParams::random(rng);
    ConformalRelationsReport a = conformal_relations_check(c);
    ConformalInvariantsReport b = conformal_invariants_check(c, p);
    rel.grad_gap = std::max(rel.grad_gap, a.grad_gap);
    rel.div_gap = std::max(rel.div_gap, a.div_gap);
    rel.skew_gap = std::max(rel.skew_gap, a.skew_gap);
    rel.sym_gap = std::max(rel.sym_gap, a.sym_gap);
    rel.dev_sym_gap = std::max(rel.dev_sym_gap, a.dev_sym_gap);
    rel.grad_curl_gap = std::max(rel.grad_curl_gap, a.grad_curl_gap);
    rel.sym_grad_curl_gap = std::max(rel.sym_grad_curl_gap, a.sym_grad_curl_gap);
    rel.skew_grad_curl_gap = std::max(rel.skew_grad_curl_gap, a.skew_grad_curl_gap);
    inv.grad_dev_sym = std::max(inv.grad_dev_sym, b.grad_dev_sym);
    inv.dev_sym_grad_curl = std::max(inv.dev_sym_grad_curl, b.dev_sym_grad_curl);
    inv.sym_curl_sym_grad = std::max(inv.sym_curl_sym_grad, b.sym_curl_sym_grad);
    inv.grad_div_gap = std::max(inv.grad_div_gap, b.grad_div_gap);
    inv.w_lin_gap = std::max(inv.w_lin_gap, b.w_lin_gap);
    inv.w_lin_alt_gap = std::max(inv.w_lin_alt_gap, b.w_lin_alt_gap);
  }
  rel.pass = rel.max_gap() <= 1e-12;
  inv.pass = std::max({inv.grad_dev_sym, inv.dev_sym_grad_curl, inv.sym_curl_sym_grad, inv.grad_div_gap,
                       inv.w_lin_gap}) <= 1e-12;
  r.contract("conformal_relations", rel.pass);
  r.contract("conformal_invariants", inv.pass);
  r.summary << "  relation table " << (rel.pass ? "pass" : "FAIL") << " (" << rel.max_gap() << ")\n"
            << "  invariants     " << (inv.pass ? "pass" : "FAIL") << "\n";

  r.doc["params"] = params_json(p);
  r.doc["trials"] = trials;
  r.doc["classification"] = table;
  r.doc["relations"] = {{"grad", rel.grad_gap},           {"div", rel.div_gap},
                        {"skew", rel.skew_gap},           {"sym", rel.sym_gap},
                        {"dev_sym", rel.dev_sym_gap},     {"grad_curl", rel.grad_curl_gap},
                        {"sym_grad_curl", rel.sym_grad_curl_gap}, {"skew_grad_curl", rel.skew_grad_curl_gap},
                        {"pass", rel.pass}};
  r.doc["invariants"] = {{"grad_dev_sym", inv.grad_dev_sym},
                         {"dev_sym_grad_curl", inv.dev_sym_grad_curl},
                         {"sym_curl_sym_grad", inv.sym_curl_sym_grad},
                         {"grad_div_minus_9_axl_W", inv.grad_div_gap},
                         {"w_lin_minus_bulk", inv.w_lin_gap},
                         {"w_lin_minus_alt_coefficient", inv.w_lin_alt_gap},
                         {"pass", inv.pass}};
  r.csv = csv.str();
  return r;
}

// ---- traction-compare -----------------------------------------------------

// bump on the face times the normal coordinate, so the normal derivative is nonzero
PolyVecField face_test_function(const BoxFace& f, int cap) {
  Poly3 b = face_bump(f).with_cap(cap) * Poly3::var(f.axis, cap);
  return PolyVecField{{b, 2.0 * b, 3.0 * b}};
}

Result traction_compare(const Options&, const json& cfg) {
  reject_unknown(cfg, {"params", "field", "field_file", "point_samples", "quadrature_order"}, "config");
  const MaterialParams p = params_from(cfg);
  const int cap = 2 * kDefaultDegreeCap;
  PolyVecField u = field_from(cfg, kDefaultDegreeCap)
                       .value_or(PolyVecField{{Poly3(0.0), Poly3::var(0) * Poly3::var(0), Poly3(0.0)}})
                       .with_cap(cap);
  const int ns = get_or(cfg, "point_samples", 2);
  if (ns < 1 || ns > 20) throw ConfigError("point_samples must lie in [1, 20]");
  const int order = get_or(cfg, "quadrature_order", kFaceQuadratureOrder);
  if (order != 12 && order != 24) throw ConfigError("quadrature_order must be 12 or 24");

  const std::vector<TractionVariant> variants{TractionVariant::Curl, TractionVariant::Axl,
                                              TractionVariant::AxlFlippedAnti};
  StressState s = assemble(u, p);
  Result r;
  std::ostringstream csv;
  csv << "record,face,variant,x1,x2,x3,t1,t2,t3,g1,g2,g3,traction_work,double_force_work,total\n";
  json points = json::array(), faces = json::array();
  double worst_gap = 0.0;
  for (int ax = 0; ax < 3; ++ax)
    for (int side = 0; side < 2; ++side) {
      BoxFace f{ax, side};
      const std::string fname = std::string(side ? "+" : "-") + "x" + std::to_string(ax + 1);
      for (int i = 0; i < ns; ++i)
        for (int k = 0; k < ns; ++k) {
          Vec3 x = f.point((i + 1.0) / (ns + 1), (k + 1.0) / (ns + 1));
          SurfacePoint sp = SurfacePoint::make(x, f.normal());
          json pj{{"face", fname}, {"x", vec_json(x)}};
          for (TractionVariant v : variants) {
            TractionSet t = traction_set(s, sp, v);
            pj[to_string(v)] = to_json(t);
            csv << "point," << fname << "," << to_string(v) << "," << num(x(0)) << "," << num(x(1)) << ","
                << num(x(2)) << "," << num(t.traction(0)) << "," << num(t.traction(1)) << "," << num(t.traction(2))
                << "," << num(t.double_force(0)) << "," << num(t.double_force(1)) << "," << num(t.double_force(2))
                << ",,,\n";
          }
          points.push_back(pj);
        }
      PolyVecField du = face_test_function(f, cap);
      json fj{{"face", fname}};
      std::map<TractionVariant, FaceWork> w;
      for (TractionVariant v : variants) {
        w[v] = boundary_virtual_work(s, du, f, v, order);
        fj[to_string(v)] = {{"traction_work", w[v].traction_part},
                            {"double_force_work", w[v].double_force_part},
                            {"total", w[v].total()}};
        csv << "face_work," << fname << "," << to_string(v) << ",,,,,,,,,," << num(w[v].traction_part) << ","
            << num(w[v].double_force_part) << "," << num(w[v].total()) << "\n";
      }
      const double gap = std::abs(w[TractionVariant::Curl].total() - w[TractionVariant::Axl].total());
      fj["curl_axl_total_gap"] = gap;
      faces.push_back(fj);
      worst_gap = std::max(worst_gap, gap);
    }
  r.contract("face_totals_agree", worst_gap <= 1e-8);
  r.summary << "  curl vs axl face totals: max gap " << worst_gap << (worst_gap <= 1e-8 ? " (agree)" : " (DIFFER)")
            << "\n";

  DoubleForceComparison a = double_force_compare(u, p, SurfacePoint::make(Vec3(1.0, 0.5, 0.5), Vec3::UnitX()));
  r.doc["params"] = params_json(p);
  r.doc["field"] = to_json(u);
  r.doc["points"] = points;
  r.doc["face_work"] = faces;
  r.doc["test_function"] = "face bump times normal coordinate, direction (1,2,3)";
  r.doc["pointwise_e1"] = {{"double_force_curl", vec_json(a.double_curl)},
                           {"double_force_axl", vec_json(a.double_axl)},
                           {"double_force_axl_flipped_anti", vec_json(a.double_axl_flipped)},
                           {"coincide", a.coincide},
                           {"coincide_flipped_anti", a.coincide_flipped}};
  r.csv = csv.str();
  return r;
}

// ---- solve ------------------------------------------------------------------

Result solve_cmd(const Options& o, const json& cfg) {
  reject_unknown(cfg, {"params", "basis", "form", "load", "samples"}, "config");
  const MaterialParams p = params_from(cfg);
  BasisSpec spec;
  if (cfg.contains("basis")) {
    const json& b = cfg.at("basis");
    reject_unknown(b, {"family", "N"}, "basis");
    try {
      spec.family = basis_family_from_name(get_or<std::string>(b, "family", "bubble"));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    spec.N = get_or(b, "N", spec.N);
  }
  if (spec.N < 1 || spec.N > kMaxModes) throw ConfigError("basis N must lie in [1, " + std::to_string(kMaxModes) + "]");
  const std::string fname = get_or<std::string>(cfg, "form", "curl");
  if (fname != "curl" && fname != "axl") throw ConfigError("form must be 'curl' or 'axl'");
  const CurvatureForm form = fname == "curl" ? CurvatureForm::Curl : CurvatureForm::Axl;
  const int ns = get_or(cfg, "samples", 5);
  if (ns < 2 || ns > 50) throw ConfigError("samples must lie in [2, 50]");
  try {
    p.validate_for_solve();
  } catch (const InadmissibleParams& e) {
    throw ConfigError(std::string("params: ") + e.what());
  }

  FieldRng rng(o.seed);
  bool manufactured = false;
  PolyVecField f = load_from(cfg, rng, true, &manufactured);
  Result r;
  r.doc["params"] = params_json(p);
  r.doc["basis"] = {{"family", to_string(spec.family)}, {"N", spec.N}, {"dimension", spec.dimension()}};
  r.doc["form"] = fname;

  if (manufactured) {
    if (spec.family != BasisFamily::Bubble) throw ConfigError("manufactured load needs the bubble basis");
    ManufacturedReport m = manufactured_check(spec, p, 1e-8, form);
    r.doc["manufactured"] = {{"x0_error", m.x0_error},
                             {"x0_error_with_boundary_work", m.x0_error_with_boundary},
                             {"boundary_work_max", m.boundary_work_max},
                             {"residual", m.residual},
                             {"galerkin_orthogonality", m.galerkin_orthogonality},
                             {"energy", m.energy},
                             {"pass", m.pass}};
    r.contract("manufactured_recovery", m.pass);
    r.summary << "  manufactured x0 error " << m.x0_error << " (with boundary work " << m.x0_error_with_boundary
              << ")\n";
    Poly3 B = box_bubble();
    f = manufactured_load(PolyVecField{{B, B, B}}, p);
  }

  AssembledSystem sys = assemble(spec, p, f, form);
  SolveReport rep;
  try {
    rep = solve(sys);
  } catch (const FactorizationFailure& e) {
    r.contract("spd_stiffness", false);
    r.doc["error"] = e.what();
    return r;
  }
  r.contract("spd_stiffness", rep.min_eigenvalue > 0.0);
  r.contract("symmetric_stiffness", rep.symmetry_gap <= 1e-12);
  r.contract("residual", rep.residual <= 1e-10);
  r.doc["load"] = to_json(f);
  r.doc["report"] = to_json(rep);

  std::ostringstream csv;
  csv << "x1,x2,x3,u1,u2,u3\n";
  json samples = json::array();
  for (int i = 0; i < ns; ++i)
    for (int j = 0; j < ns; ++j)
      for (int k = 0; k < ns; ++k) {
        Vec3 x(double(i) / (ns - 1), double(j) / (ns - 1), double(k) / (ns - 1));
        Vec3 v = evaluate_solution(sys, rep.c, x);
        samples.push_back({{"x", vec_json(x)}, {"u", vec_json(v)}});
        csv << num(x(0)) << "," << num(x(1)) << "," << num(x(2)) << "," << num(v(0)) << "," << num(v(1)) << ","
            << num(v(2)) << "\n";
      }
  r.doc["samples"] = samples;
  r.csv = csv.str();
  r.summary << "  dimension " << rep.dimension << ", energy " << rep.energy << ", min eigenvalue " << rep.min_eigenvalue
            << ", coercivity " << rep.coercivity << ", residual " << rep.residual << "\n";
  return r;
}

// ---- limit-study --------------------------------------------------------------

Result limit_study(const Options& o, const json& cfg) {
  reject_unknown(cfg, {"params", "models", "N", "ladder", "load", "allow_experimental"}, "config");
  const MaterialParams p = params_from(cfg);
  const int N = get_or(cfg, "N", 2);
  if (N < 1 || N > kMaxModes) throw ConfigError("N must lie in [1, " + std::to_string(kMaxModes) + "]");
  const auto ladder = get_or<std::vector<double>>(cfg, "ladder", {1.0, 1e2, 1e4, 1e6});
  const bool experimental = get_or(cfg, "allow_experimental", false);
  std::vector<MicromorphicModel> models;
  try {
    for (const auto& n : get_or<std::vector<std::string>>(cfg, "models", {"cosserat", "microstrain"}))
      models.push_back(micromorphic_model_from_name(n));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  for (MicromorphicModel m : models)
    if (m == MicromorphicModel::SymCurl && !experimental)
      throw ConfigError("sym_curl is experimental; set allow_experimental");

  FieldRng rng(o.seed);
  PolyVecField f = load_from(cfg, rng, false, nullptr);
  Result r;
  json studies = json::array();
  std::ostringstream csv;
  csv << "model,penalty,violation,energy,gap,stress_skew,residual\n";
  for (MicromorphicModel m : models) {
    LimitStudy st;
    try {
      st = penalty_limit_study(MicromorphicSpec::from_params(m, p), p, N, f, ladder, experimental);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    studies.push_back(to_json(st));
    for (const LimitRow& row : st.rows)
      csv << to_string(m) << "," << num(row.penalty) << "," << num(row.violation) << "," << num(row.energy) << ","
          << (row.gap ? num(*row.gap) : "") << "," << num(row.stress_skew) << "," << num(row.residual) << "\n";
    r.contract(to_string(m) + ":violation_decreasing", st.violation_decreasing);
    r.contract(to_string(m) + ":energy_increasing", st.energy_increasing);
    r.contract(to_string(m) + ":bounded_above", st.bounded_above);
    r.summary << "  " << std::left << std::setw(16) << to_string(m) << (st.pass() ? "pass" : "FAIL")
              << "  final violation " << st.rows.back().violation << ", energy " << st.rows.back().energy;
    if (st.constrained) r.summary << ", constrained " << *st.constrained;
    r.summary << "\n";
  }
  r.doc["params"] = params_json(p);
  r.doc["N"] = N;
  r.doc["ladder"] = ladder;
  r.doc["load"] = to_json(f);
  r.doc["studies"] = studies;
  r.csv = csv.str();
  return r;
}

// ---- lift-check -----------------------------------------------------------------

Result lift_check(const Options& o, const json& cfg) {
  reject_unknown(cfg, {"params", "degree", "emit_tensor"}, "config");
  const MaterialParams p = params_from(cfg);
  const int deg = degree_from(cfg, 4);
  const int trials = trials_from(o, 50);
  const bool emit = get_or(cfg, "emit_tensor", false);
  CurvatureFourthOrder L = CurvatureFourthOrder::isotropic(p.alpha1, p.alpha2);
  FieldRng rng(o.seed);

  double gap_inv = 0.0, gap_literal = 0.0, rt_consistent = 0.0, rt_flipped = 0.0;
  bool inv_ok = true, rt_ok = true;
  for (int t = 0; t < trials; ++t) {
    PolyVecField u = rng.vec_field(deg).with_cap(2 * kDefaultDegreeCap);
    LiftReport a = verify_energy_equality(L, u, LiftAdjoint::InverseOfA);
    LiftReport b = verify_energy_equality(L, u, LiftAdjoint::LiteralAT);
    RoundTripReport c = reconstruction_round_trip(u, ReconstructionSigns::Consistent);
    RoundTripReport d = reconstruction_round_trip(u, ReconstructionSigns::FlippedMiddle);
    gap_inv = std::max(gap_inv, a.discrepancy);
    gap_literal = std::max(gap_literal, b.discrepancy);
    rt_consistent = std::max(rt_consistent, c.max_error);
    rt_flipped = std::max(rt_flipped, d.max_error);
    inv_ok = inv_ok && a.pass;
    rt_ok = rt_ok && c.pass;
  }
  PolyVecField ex{{Poly3(0.0, 16), Poly3::var(0, 16) * Poly3::var(0, 16), Poly3(0.0, 16)}};
  LiftReport e1 = verify_energy_equality(L, ex, LiftAdjoint::InverseOfA);
  LiftReport e2 = verify_energy_equality(L, ex, LiftAdjoint::LiteralAT);

  Result r;
  r.contract("energy_equality", inv_ok);
  r.contract("round_trip_consistent_signs", rt_ok);
  r.summary << "  energy equality (S^T B S)   " << (inv_ok ? "pass" : "FAIL") << " (" << gap_inv << ")\n"
            << "  literal A B A^T discrepancy " << gap_literal << "\n"
            << "  round trip consistent/flipped " << rt_consistent << " / " << rt_flipped << "\n"
            << "  (0, x1^2, 0): " << e1.lhs.integrate() << " vs " << e1.rhs.integrate() << "\n";
  r.doc["params"] = params_json(p);
  r.doc["trials"] = trials;
  r.doc["degree"] = deg;
  r.doc["energy_equality"] = {{"max_discrepancy", gap_inv}, {"pass", inv_ok}};
  r.doc["literal_adjoint"] = {{"max_discrepancy", gap_literal}};
  r.doc["round_trip"] = {{"consistent_signs", rt_consistent},
                         {"flipped_middle_sign", rt_flipped},
                         {"consistent_pass", rt_ok},
                         {"flipped_middle_fails", rt_flipped > 1e-12}};
  r.doc["example_x1_squared"] = {{"lhs", to_json(e1.lhs)},
                                 {"rhs", to_json(e1.rhs)},
                                 {"literal_lhs", to_json(e2.lhs)},
                                 {"discrepancy", e1.discrepancy}};
  if (emit) r.doc["C"] = to_json(build_C(L));
  return r;
}

using Command = Result (*)(const Options&, const json&);

const std::map<std::string, Command>& commands() {
  static const std::map<std::string, Command> m{{"verify-identities", verify_identities},
                                                {"energy-table", energy_table},
                                                {"conformal-report", conformal_report},
                                                {"traction-compare", traction_compare},
                                                {"solve", solve_cmd},
                                                {"limit-study", limit_study},
                                                {"lift-check", lift_check}};
  return m;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"couple-stress toolkit"};
  app.require_subcommand(1);
  Options o;
  for (const auto& [name, fn] : commands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "seed for random fields");
    sub->add_option("--trials", o.trials, "number of random trials");
    sub->add_option("--out", o.out_path, "output path");
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }
  for (CLI::App* s : app.get_subcommands()) o.command = s->get_name();

  Result r;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    json cfg = o.config_path.empty() ? json::object() : read_json_file(o.config_path);
    if (!cfg.is_object()) throw ConfigError("config must be a JSON object");
    r = commands().at(o.command)(o, cfg);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InadmissibleParams& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DegreeOverflow& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    // anything else means a module refused its own inputs
    err << "contract violated: " << e.what() << "\n";
    return kExitContract;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (o.format == "csv" && r.csv.empty()) {
    err << "config error: " << o.command << " has no csv output\n";
    return kExitConfig;
  }
  json doc = json::object();
  doc["schema"] = "1";
  doc["command"] = o.command;
  doc["seed"] = o.seed;
  doc["pass"] = r.failures.empty();
  doc["failures"] = r.failures;
  for (auto& [k, v] : r.doc.items()) doc[k] = v;

  std::string payload;
  if (o.format == "csv")
    payload = "# schema=1 command=" + o.command + " seed=" + std::to_string(o.seed) + "\n" + r.csv;
  else
    payload = doc.dump(2) + "\n";

  std::ostream* human = &out;
  if (o.out_path.empty()) {
    out << payload;
    human = &err;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "config error: cannot write '" << o.out_path << "'\n";
      return kExitConfig;
    }
    f << payload;
  }
  *human << o.command << " (seed " << o.seed << ")\n" << r.summary.str();
  for (const auto& name : r.failures) *human << "contract violated: " << name << "\n";
  *human << (r.failures.empty() ? "all contracts hold" : "FAILED") << " in " << std::fixed << std::setprecision(2)
         << secs << " s\n";
  return r.failures.empty() ? kExitOk : kExitContract;
}

}  // namespace cstress::cli
