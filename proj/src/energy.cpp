#include "cstress/energy.hpp"

#include <algorithm>

#include "cstress/tensor.hpp"

namespace cstress {

void MaterialParams::validate() const {
  if (!(mu > 0.0)) throw InadmissibleParams("mu must be positive");
  if (!(3.0 * lambda + 2.0 * mu > 0.0)) throw InadmissibleParams("3 lambda + 2 mu must be positive");
  if (!(Lc > 0.0)) throw InadmissibleParams("Lc must be positive");
  if (alpha1 < 0.0 || alpha2 < 0.0) throw InadmissibleParams("alpha1, alpha2 must be nonnegative");
}

void MaterialParams::validate_for_solve() const {
  validate();
  if (!(alpha1 > 0.0)) throw InadmissibleParams("alpha1 must be positive");
}

namespace {

struct ModelInfo {
  ModelKind kind;
  const char* name;
  std::size_t ncoef;
};

constexpr ModelInfo kModels[] = {
    {ModelKind::MindlinI, "MindlinI", 5},
    {ModelKind::MindlinII, "MindlinII", 5},
    {ModelKind::MindlinIII, "MindlinIII", 5},
    {ModelKind::Lam, "Lam", 3},
    {ModelKind::AifantisLazar, "AifantisLazar", 2},
    {ModelKind::SharmaKleinert, "SharmaKleinert", 2},
    {ModelKind::Indeterminate, "Indeterminate", 2},
    {ModelKind::Grioli, "Grioli", 2},
    {ModelKind::ModifiedConformal, "ModifiedConformal", 1},
    {ModelKind::HadjesfandiariDargush, "HadjesfandiariDargush", 1},
    {ModelKind::CurlSym, "CurlSym", 2},
};

const ModelInfo& info(ModelKind k) {
  for (const auto& m : kModels)
    if (m.kind == k) return m;
  throw UnknownModel("unknown model kind");
}

CurvatureModel make(ModelKind k, std::vector<double> c) { return CurvatureModel{k, std::move(c)}; }

}  // namespace

std::size_t coefficient_count(ModelKind kind) { return info(kind).ncoef; }
std::string model_name(ModelKind kind) { return info(kind).name; }

const std::vector<ModelKind>& all_models() {
  static const std::vector<ModelKind> v = [] {
    std::vector<ModelKind> r;
    for (const auto& m : kModels) r.push_back(m.kind);
    return r;
  }();
  return v;
}

CurvatureModel CurvatureModel::mindlin_I(const std::array<double, 5>& a) {
  return make(ModelKind::MindlinI, {a.begin(), a.end()});
}
CurvatureModel CurvatureModel::mindlin_II(const std::array<double, 5>& a) {
  return make(ModelKind::MindlinII, {a.begin(), a.end()});
}
CurvatureModel CurvatureModel::mindlin_III(const std::array<double, 5>& a) {
  return make(ModelKind::MindlinIII, {a.begin(), a.end()});
}
CurvatureModel CurvatureModel::lam(double a0, double a1, double a2) { return make(ModelKind::Lam, {a0, a1, a2}); }
CurvatureModel CurvatureModel::aifantis_lazar(double a0, double a1) {
  return make(ModelKind::AifantisLazar, {a0, a1});
}
CurvatureModel CurvatureModel::sharma_kleinert(double a0, double a1) {
  return make(ModelKind::SharmaKleinert, {a0, a1});
}
CurvatureModel CurvatureModel::indeterminate(double alpha1, double alpha2) {
  return make(ModelKind::Indeterminate, {alpha1, alpha2});
}
CurvatureModel CurvatureModel::grioli(double alpha1, double eta_prime) {
  return make(ModelKind::Grioli, {alpha1, eta_prime});
}
CurvatureModel CurvatureModel::modified_conformal(double alpha1) {
  return make(ModelKind::ModifiedConformal, {alpha1});
}
CurvatureModel CurvatureModel::hadjesfandiari_dargush(double alpha2) {
  return make(ModelKind::HadjesfandiariDargush, {alpha2});
}
CurvatureModel CurvatureModel::curl_sym(double alpha1, double alpha2) {
  return make(ModelKind::CurlSym, {alpha1, alpha2});
}

CurvatureModel CurvatureModel::from_name(const std::string& name, const std::vector<double>& coeffs) {
  for (const auto& m : kModels) {
    if (name != m.name) continue;
    if (coeffs.size() != m.ncoef)
      throw UnknownModel("model " + name + " expects " + std::to_string(m.ncoef) + " coefficients");
    return make(m.kind, coeffs);
  }
  throw UnknownModel("unknown curvature model '" + name + "'");
}

std::string CurvatureModel::name() const { return model_name(kind); }

Poly3 w_lin(const PolyVecField& u, const MaterialParams& p) {
  PolyMatField e = sym(grad(u));
  Poly3 tr = e.trace();
  return p.mu * frob2(e) + (0.5 * p.lambda) * (tr * tr);
}

Poly3 w_lin_split(const PolyVecField& u, const MaterialParams& p) {
  PolyMatField e = sym(grad(u));
  Poly3 tr = e.trace();
  return p.mu * frob2(dev(e)) + (0.5 * p.bulk()) * (tr * tr);
}

CurvatureTensors curvature_tensors(const PolyVecField& u) {
  PolyMatField G = grad(u);
  return {grad(axl_field(skw(G))), curl_mat(sym(G))};
}

namespace {

// eta_{ijk} = u_{k,ij}
PolyTen3Field mindlin_eta(const PolyTen3Field& D) {
  PolyTen3Field eta;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) eta(i, j, k) = D(k, i, j);
  return eta;
}

// eta~_{ijk} = eps_{kj,i}
PolyTen3Field mindlin_eta_tilde(const PolyVecField& u) {
  PolyMatField e = sym(grad(u));
  PolyTen3Field t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) t(i, j, k) = e(k, j).derivative(i);
  return t;
}

// eta^S_{ijk} = (u_{k,ij} + u_{i,jk} + u_{j,ki}) / 3
PolyTen3Field mindlin_eta_S(const PolyTen3Field& D) {
  PolyTen3Field s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s(i, j, k) = (1.0 / 3.0) * (D(k, i, j) + D(i, j, k) + D(j, k, i));
  return s;
}

Poly3 energy_mindlin_I(const PolyVecField& u, const std::vector<double>& a) {
  PolyTen3Field eta = mindlin_eta(second_gradient(u));
  // t1[k] = eta_kii, t2[k] = eta_iik
  std::array<Poly3, 3> t1, t2;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      t1[k] += eta(k, i, i);
      t2[k] += eta(i, i, k);
    }
  Poly3 s1, s3, s4, s5;
  for (int k = 0; k < 3; ++k) {
    s1 += t1[k] * t1[k];
    s4 += t2[k] * t2[k];
    s5 += t2[k] * t1[k];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s3 += eta(i, j, k) * eta(j, k, i);
  return a[0] * s1 + a[1] * inner(eta, eta) + a[2] * s3 + a[3] * s4 + a[4] * s5;
}

Poly3 energy_mindlin_II(const PolyVecField& u, const std::vector<double>& a) {
  PolyTen3Field t = mindlin_eta_tilde(u);
  std::array<Poly3, 3> iik, kjj;  // eta~_iik (free k), eta~_kjj (free k)
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      iik[k] += t(i, i, k);
      kjj[k] += t(k, i, i);
    }
  Poly3 s1, s2, s3, s5;
  for (int k = 0; k < 3; ++k) {
    s1 += iik[k] * kjj[k];
    s2 += kjj[k] * kjj[k];
    s3 += iik[k] * iik[k];
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s5 += t(i, j, k) * t(k, j, i);
  return a[0] * s1 + a[1] * s2 + a[2] * s3 + a[3] * inner(t, t) + a[4] * s5;
}

Poly3 energy_mindlin_III(const PolyVecField& u, const std::vector<double>& a) {
  PolyTen3Field D = second_gradient(u);
  PolyTen3Field eS = mindlin_eta_S(D);
  // k~_ij = 1/2 eps_jlk u_{k,li}
  PolyMatField k;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m) {
          int e = levi_civita(j, l, m);
          if (e != 0) k(i, j) += (0.5 * e) * D(m, l, i);
        }
  std::array<Poly3, 3> iij, kll;
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 3; ++i) {
      iij[j] += eS(i, i, j);
      kll[j] += eS(j, i, i);
    }
  Poly3 s3, s5;
  for (int j = 0; j < 3; ++j) s3 += iij[j] * iij[j];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 3; ++m) {
        int e = levi_civita(i, j, m);
        if (e != 0) s5 += static_cast<double>(e) * (k(i, j) * kll[m]);
      }
  return a[0] * frob2(k) + a[1] * inner(k, k.transpose()) + a[2] * s3 + a[3] * inner(eS, eS) + a[4] * s5;
}

Poly3 grad_div_sq(const PolyVecField& u) {
  PolyVecField g = grad(div(u));
  return dot(g, g);
}

Poly3 energy_lam(const PolyVecField& u, const std::vector<double>& a) {
  PolyTen3Field eS = mindlin_eta_S(second_gradient(u));
  std::array<Poly3, 3> mmk;
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m) mmk[k] += eS(m, m, k);
  PolyTen3Field hat = eS;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Poly3 e0;
        if (i == j) e0 += mmk[k];
        if (j == k) e0 += mmk[i];
        if (k == i) e0 += mmk[j];
        hat(i, j, k) -= 0.2 * e0;
      }
  PolyMatField gc = grad(curl_vec(u));
  return a[0] * grad_div_sq(u) + a[1] * inner(hat, hat) + a[2] * frob2(sym(gc));
}

Poly3 energy_aifantis_lazar(const PolyVecField& u, const std::vector<double>& a) {
  PolyTen3Field g = grad(sym(grad(u)));
  return a[0] * grad_div_sq(u) + a[1] * inner(g, g);
}

Poly3 energy_sharma_kleinert(const PolyVecField& u, const std::vector<double>& a) {
  return a[0] * grad_div_sq(u) + a[1] * frob2(grad(curl_vec(u)));
}

Poly3 energy_indeterminate(const PolyVecField& u, double a1, double a2) {
  PolyMatField gc = grad(curl_vec(u));
  return (0.25 * a1) * frob2(sym(gc)) + (0.25 * a2) * frob2(skw(gc));
}

Poly3 energy_curl_sym(const PolyVecField& u, double a1, double a2) {
  PolyMatField kh = curl_mat(sym(grad(u)));
  Poly3 r;
  if (a1 != 0.0) r += a1 * frob2(dev_sym(kh));
  if (a2 != 0.0) r += a2 * frob2(skw(kh));
  return r;
}

Poly3 energy_grioli(const PolyVecField& u, double a1, double eta) {
  PolyMatField gc = grad(curl_vec(u));
  return (0.25 * a1) * frob2(gc) + (0.25 * eta) * (gc * gc).trace();
}

}  // namespace

Poly3 w_curv(const PolyVecField& u, const CurvatureModel& model, const MaterialParams& p) {
  const auto& c = model.coeffs;
  if (c.size() != coefficient_count(model.kind)) throw UnknownModel("coefficient count mismatch for " + model.name());
  Poly3 w;
  switch (model.kind) {
    case ModelKind::MindlinI: w = energy_mindlin_I(u, c); break;
    case ModelKind::MindlinII: w = energy_mindlin_II(u, c); break;
    case ModelKind::MindlinIII: w = energy_mindlin_III(u, c); break;
    case ModelKind::Lam: w = energy_lam(u, c); break;
    case ModelKind::AifantisLazar: w = energy_aifantis_lazar(u, c); break;
    case ModelKind::SharmaKleinert: w = energy_sharma_kleinert(u, c); break;
    case ModelKind::Indeterminate: w = energy_indeterminate(u, c[0], c[1]); break;
    case ModelKind::Grioli: w = energy_grioli(u, c[0], c[1]); break;
    case ModelKind::ModifiedConformal: w = energy_curl_sym(u, c[0], 0.0); break;
    case ModelKind::HadjesfandiariDargush: w = energy_curl_sym(u, 0.0, c[0]); break;
    case ModelKind::CurlSym: w = energy_curl_sym(u, c[0], c[1]); break;
    default: throw UnknownModel("unknown model kind");
  }
  return p.mu_L2() * w;
}

FiveFormReport five_form_report(const PolyVecField& u, const MaterialParams& p, double tol) {
  const double a1 = p.alpha1, a2 = p.alpha2, s = p.mu_L2();
  PolyMatField G = grad(u);
  PolyMatField gc = grad(curl_vec(u));
  PolyMatField kt = grad(axl_field(skw(G)));
  PolyMatField kh = curl_mat(sym(G));
  FiveFormReport r;
  r.forms[0] = s * ((0.25 * a1) * frob2(sym(gc)) + (0.25 * a2) * frob2(skw(gc)));
  r.forms[1] = s * (a1 * frob2(sym(kt)) + a2 * frob2(skw(kt)));
  r.forms[2] = s * ((0.25 * a1) * frob2(dev_sym(gc)) + (0.25 * a2) * frob2(skw(gc)));
  r.forms[3] = s * (a1 * frob2(sym(kh)) + a2 * frob2(skw(kh)));
  r.forms[4] = s * (a1 * frob2(dev_sym(kh)) + a2 * frob2(skw(kh)));
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      r.max_discrepancy = std::max(r.max_discrepancy, (r.forms[i] - r.forms[j]).max_abs_coeff());
  r.pass = r.max_discrepancy <= tol;
  return r;
}

CurvatureModel representative_model(ModelKind k, const MaterialParams& p) {
  switch (k) {
    case ModelKind::MindlinI: return CurvatureModel::mindlin_I({1, 1, 1, 1, 1});
    case ModelKind::MindlinII: return CurvatureModel::mindlin_II({1, 1, 1, 1, 1});
    case ModelKind::MindlinIII: return CurvatureModel::mindlin_III({1, 1, 1, 1, 1});
    case ModelKind::Lam: return CurvatureModel::lam(1, 1, 1);
    case ModelKind::AifantisLazar: return CurvatureModel::aifantis_lazar(1, 1);
    case ModelKind::SharmaKleinert: return CurvatureModel::sharma_kleinert(1, 1);
    case ModelKind::Indeterminate: return CurvatureModel::indeterminate(p.alpha1, p.alpha2);
    case ModelKind::Grioli: return CurvatureModel::grioli(p.alpha1, p.eta_prime);
    case ModelKind::ModifiedConformal: return CurvatureModel::modified_conformal(p.alpha1);
    case ModelKind::HadjesfandiariDargush: return CurvatureModel::hadjesfandiari_dargush(p.alpha2);
    case ModelKind::CurlSym: return CurvatureModel::curl_sym(p.alpha1, p.alpha2);
  }
  throw UnknownModel("unknown model kind");
}

}  // namespace cstress
