#pragma once
// Elastic and curvature energy densities as exact polynomials.

#include <array>
#include <string>
#include <vector>

#include "cstress/params.hpp"
#include "cstress/poly.hpp"

namespace cstress {

enum class ModelKind {
  MindlinI,
  MindlinII,
  MindlinIII,
  Lam,
  AifantisLazar,
  SharmaKleinert,
  Indeterminate,
  Grioli,
  ModifiedConformal,
  HadjesfandiariDargush,
  CurlSym
};

class UnknownModel : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurvatureModel {
  ModelKind kind = ModelKind::Indeterminate;
  std::vector<double> coeffs;

  static CurvatureModel mindlin_I(const std::array<double, 5>& a);
  static CurvatureModel mindlin_II(const std::array<double, 5>& a);
  static CurvatureModel mindlin_III(const std::array<double, 5>& a);
  static CurvatureModel lam(double a0, double a1, double a2);
  static CurvatureModel aifantis_lazar(double a0, double a1);
  static CurvatureModel sharma_kleinert(double a0, double a1);
  static CurvatureModel indeterminate(double alpha1, double alpha2);
  static CurvatureModel grioli(double alpha1, double eta_prime);
  static CurvatureModel modified_conformal(double alpha1);
  static CurvatureModel hadjesfandiari_dargush(double alpha2);
  static CurvatureModel curl_sym(double alpha1, double alpha2);

  // Throws UnknownModel for an unrecognised name or a wrong coefficient count.
  static CurvatureModel from_name(const std::string& name, const std::vector<double>& coeffs);
  std::string name() const;
};

std::size_t coefficient_count(ModelKind kind);
// Indeterminate, Grioli, ModifiedConformal, HD and CurlSym take alpha1/alpha2/eta' from p;
// the remaining families get unit coefficients.
CurvatureModel representative_model(ModelKind k, const MaterialParams& p);
const std::vector<ModelKind>& all_models();
std::string model_name(ModelKind kind);

// mu |sym grad u|^2 + lambda/2 (tr sym grad u)^2
Poly3 w_lin(const PolyVecField& u, const MaterialParams& p);
// mu |dev sym grad u|^2 + kappa/2 (tr)^2
Poly3 w_lin_split(const PolyVecField& u, const MaterialParams& p);

struct CurvatureTensors {
  PolyMatField k_tilde;  // grad axl(skw grad u)
  PolyMatField k_hat;    // Curl(sym grad u)
};
CurvatureTensors curvature_tensors(const PolyVecField& u);

// Curvature density, including the mu Lc^2 prefactor.
Poly3 w_curv(const PolyVecField& u, const CurvatureModel& model, const MaterialParams& p);

struct FiveFormReport {
  std::array<Poly3, 5> forms;
  double max_discrepancy = 0.0;
  bool pass = false;
};
// The five equivalent forms of the indeterminate energy with p.alpha1, p.alpha2.
FiveFormReport five_form_report(const PolyVecField& u, const MaterialParams& p, double tol = 1e-12);

}  // namespace cstress
