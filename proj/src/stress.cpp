#include "cstress/stress.hpp"

#include "cstress/energy.hpp"
#include "cstress/poly_json.hpp"

namespace cstress {

namespace {

PolyMatField hyperstress(const PolyMatField& k, const MaterialParams& p) {
  PolyMatField m;
  if (p.alpha1 != 0.0) m += (2.0 * p.alpha1) * dev_sym(k);
  if (p.alpha2 != 0.0) m += (2.0 * p.alpha2) * skw(k);
  return p.mu_L2() * m;
}

}  // namespace

StressState assemble(const PolyVecField& u, const MaterialParams& p) {
  PolyMatField G = grad(u);
  StressState s;
  s.sigma = (2.0 * p.mu) * sym(G) + PolyMatField::identity_times(p.lambda * G.trace());
  CurvatureTensors k = curvature_tensors(u);
  s.m_tilde = hyperstress(k.k_tilde, p);
  s.m_hat = hyperstress(k.k_hat, p);
  s.tau_tilde = 0.5 * anti_field(div_mat(s.m_tilde));
  s.tau_hat = sym(curl_mat(s.m_hat));
  return s;
}

PolyVecField equilibrium_residual(const StressState& s, const PolyVecField& f, Formulation form) {
  PolyMatField total = form == Formulation::Axl ? s.sigma - s.tau_tilde : s.sigma + s.tau_hat;
  return div_mat(total) + f;
}

PolyVecField equilibrium_residual(const PolyVecField& u, const PolyVecField& f, const MaterialParams& p,
                                  Formulation form) {
  return equilibrium_residual(assemble(u, p), f, form);
}

PolyVecField manufactured_load(const PolyVecField& u, const MaterialParams& p) {
  StressState s = assemble(u, p);
  return -1.0 * div_mat(s.sigma + s.tau_hat);
}

CoupleStressRelationReport couple_stress_relation_check(const PolyVecField& u, const MaterialParams& p,
                                                        double tol) {
  StressState s = assemble(u, p);
  CoupleStressRelationReport r;
  r.sym_gap = (sym(s.m_tilde) - sym(s.m_hat)).max_abs_coeff();
  r.equal_gap = (s.m_tilde - s.m_hat).max_abs_coeff();
  r.opposite_gap = (s.m_tilde + s.m_hat).max_abs_coeff();
  r.transpose_gap = (s.m_tilde - s.m_hat.transpose()).max_abs_coeff();
  r.pass = r.sym_gap <= tol && r.transpose_gap <= tol;
  if (p.alpha2 == 0.0) r.pass = r.pass && r.equal_gap <= tol;
  if (p.alpha1 == 0.0) r.pass = r.pass && r.opposite_gap <= tol;
  return r;
}

nlohmann::json to_json(const StressState& s) {
  return {{"sigma", to_json(s.sigma)},
          {"m_tilde", to_json(s.m_tilde)},
          {"tau_tilde", to_json(s.tau_tilde)},
          {"m_hat", to_json(s.m_hat)},
          {"tau_hat", to_json(s.tau_hat)}};
}

}  // namespace cstress
