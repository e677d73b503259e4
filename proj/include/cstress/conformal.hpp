#pragma once
// Infinitesimal conformal maps and the conformal-invariance classification.

#include <string>
#include <vector>

#include "cstress/energy.hpp"
#include "cstress/random_fields.hpp"

namespace cstress {

struct ConformalParams {
  Mat3 W_bar = Mat3::Zero();  // antisymmetric
  Mat3 A_hat = Mat3::Zero();  // antisymmetric
  double p_hat = 0.0;
  Vec3 b_hat = Vec3::Zero();

  void validate(double tol = kAntisymTol) const;
  static ConformalParams random(FieldRng& rng);
};

// phi_c(x) = 1/2 (2 <w,x> x - w |x|^2) + (p Id + A) x + b, w = axl W
PolyVecField conformal_map(const ConformalParams& c);

struct ConformalRelationsReport {
  double grad_gap = 0.0;           // grad phi - (anti(W x) + (<w,x> + p) Id + A)
  double div_gap = 0.0;            // div phi - 3(<w,x> + p)
  double skew_gap = 0.0;           // skw grad phi - anti(W x) - A
  double sym_gap = 0.0;            // sym grad phi - (<w,x> + p) Id
  double dev_sym_gap = 0.0;        // dev sym grad phi
  double grad_curl_gap = 0.0;      // grad curl phi - 2 W
  double sym_grad_curl_gap = 0.0;  // sym grad curl phi
  double skew_grad_curl_gap = 0.0; // skw grad curl phi - 2 W
  double max_gap() const;
  bool pass = false;
};
ConformalRelationsReport conformal_relations_check(const ConformalParams& c, double tol = 1e-12);

// Pointwise invariants of phi_c, all as exact polynomials.
struct ConformalInvariantsReport {
  double grad_dev_sym = 0.0;       // max coeff of |grad dev sym grad phi|^2
  double dev_sym_grad_curl = 0.0;  // |dev sym grad curl phi|^2
  double sym_curl_sym_grad = 0.0;  // |sym Curl sym grad phi|^2
  double grad_div = 0.0;           // |grad div phi|^2, a constant
  double grad_div_gap = 0.0;       // |grad div phi|^2 - 9 |axl W|^2
  double w_lin_gap = 0.0;          // W_lin(phi) - kappa/2 (tr grad phi)^2
  double w_lin_alt_gap = 0.0;  // W_lin(phi) - (2 mu + 3 lambda)/2 (tr grad phi)^2, kept for the record
  bool pass = false;               // first four invariants and w_lin_gap within tol
};
ConformalInvariantsReport conformal_invariants_check(const ConformalParams& c, const MaterialParams& p,
                                                     double tol = 1e-12);

enum class InvarianceVerdict { Invariant, ConstantDensity, NotInvariant };
std::string to_string(InvarianceVerdict v);

struct InvarianceRow {
  std::string model;
  InvarianceVerdict verdict = InvarianceVerdict::NotInvariant;
  double max_density_coeff = 0.0;    // largest |coefficient| of w_curv(phi_c) over the trials
  double max_nonconstant_coeff = 0.0; // largest non-constant coefficient
  bool contract_ok = true;            // expected verdict for models with a stated classification
};

// Evaluates every curvature model on `trials` random conformal maps.
std::vector<InvarianceRow> invariance_report(const MaterialParams& p, int trials, FieldRng& rng,
                                             double tol = 1e-12);
// Single-model variant.
InvarianceRow invariance_report(const CurvatureModel& model, const MaterialParams& p, int trials, FieldRng& rng,
                                double tol = 1e-12);

}  // namespace cstress
