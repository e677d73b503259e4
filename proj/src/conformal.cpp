#include "cstress/conformal.hpp"

#include <algorithm>
#include <cmath>

namespace cstress {

void ConformalParams::validate(double tol) const {
  if (sym(W_bar).norm() > tol) throw NotAntisymmetric("W_bar must be antisymmetric");
  if (sym(A_hat).norm() > tol) throw NotAntisymmetric("A_hat must be antisymmetric");
}

ConformalParams ConformalParams::random(FieldRng& rng) {
  ConformalParams c;
  c.W_bar = rng.antisym();
  c.A_hat = rng.antisym();
  c.p_hat = rng.uniform();
  c.b_hat = rng.vec();
  return c;
}

PolyVecField conformal_map(const ConformalParams& c) {
  c.validate();
  Vec3 w = axl(c.W_bar);
  PolyVecField x{{Poly3::var(0), Poly3::var(1), Poly3::var(2)}};
  Poly3 wx = w(0) * x[0] + w(1) * x[1] + w(2) * x[2];
  Poly3 xx = dot(x, x);
  PolyVecField phi;
  for (int i = 0; i < 3; ++i) {
    phi[i] = wx * x[i] - (0.5 * w(i)) * xx + c.p_hat * x[i] + Poly3(c.b_hat(i));
    for (int j = 0; j < 3; ++j) phi[i] += c.A_hat(i, j) * x[j];
  }
  return phi;
}

double ConformalRelationsReport::max_gap() const {
  return std::max({grad_gap, div_gap, skew_gap, sym_gap, dev_sym_gap, grad_curl_gap, sym_grad_curl_gap,
                   skew_grad_curl_gap});
}

ConformalRelationsReport conformal_relations_check(const ConformalParams& c, double tol) {
  PolyVecField phi = conformal_map(c);
  Vec3 w = axl(c.W_bar);
  PolyVecField x{{Poly3::var(0), Poly3::var(1), Poly3::var(2)}};
  Poly3 s = w(0) * x[0] + w(1) * x[1] + w(2) * x[2] + Poly3(c.p_hat);
  PolyMatField Wx = anti_field(PolyMatField::constant(c.W_bar) * x);
  PolyMatField A = PolyMatField::constant(c.A_hat);
  PolyMatField W2 = PolyMatField::constant(2.0 * c.W_bar);

  PolyMatField G = grad(phi);
  PolyMatField gc = grad(curl_vec(phi));
  ConformalRelationsReport r;
  r.grad_gap = (G - (Wx + PolyMatField::identity_times(s) + A)).max_abs_coeff();
  r.div_gap = (div(phi) - 3.0 * s).max_abs_coeff();
  r.skew_gap = (skw(G) - Wx - A).max_abs_coeff();
  r.sym_gap = (sym(G) - PolyMatField::identity_times(s)).max_abs_coeff();
  r.dev_sym_gap = dev_sym(G).max_abs_coeff();
  r.grad_curl_gap = (gc - W2).max_abs_coeff();
  r.sym_grad_curl_gap = sym(gc).max_abs_coeff();
  r.skew_grad_curl_gap = (skw(gc) - W2).max_abs_coeff();
  r.pass = r.max_gap() <= tol;
  return r;
}

ConformalInvariantsReport conformal_invariants_check(const ConformalParams& c, const MaterialParams& p,
                                                     double tol) {
  PolyVecField phi = conformal_map(c);
  PolyMatField G = grad(phi);
  ConformalInvariantsReport r;
  {
    PolyTen3Field gd = grad(dev_sym(G));
    r.grad_dev_sym = inner(gd, gd).max_abs_coeff();
  }
  r.dev_sym_grad_curl = frob2(dev_sym(grad(curl_vec(phi)))).max_abs_coeff();
  r.sym_curl_sym_grad = frob2(sym(curl_mat(sym(G)))).max_abs_coeff();
  Poly3 gd = dot(grad(div(phi)), grad(div(phi)));
  r.grad_div = gd.max_abs_coeff();
  r.grad_div_gap = (gd - Poly3(9.0 * axl(c.W_bar).squaredNorm())).max_abs_coeff();
  Poly3 tr = G.trace();
  Poly3 wl = w_lin(phi, p);
  r.w_lin_gap = (wl - (0.5 * p.bulk()) * (tr * tr)).max_abs_coeff();
  r.w_lin_alt_gap = (wl - (0.5 * (2.0 * p.mu + 3.0 * p.lambda)) * (tr * tr)).max_abs_coeff();
  r.pass = std::max({r.grad_dev_sym, r.dev_sym_grad_curl, r.sym_curl_sym_grad, r.grad_div_gap, r.w_lin_gap}) <= tol;
  return r;
}

std::string to_string(InvarianceVerdict v) {
  switch (v) {
    case InvarianceVerdict::Invariant: return "invariant";
    case InvarianceVerdict::ConstantDensity: return "not invariant (constant density)";
    case InvarianceVerdict::NotInvariant: return "not invariant";
  }
  return "?";
}

namespace {

double nonconstant_coeff(const Poly3& p) {
  double m = 0.0;
  for (const auto& [e, c] : p.terms())
    if (e[0] + e[1] + e[2] > 0) m = std::max(m, std::abs(c));
  return m;
}

}  // namespace

InvarianceRow invariance_report(const CurvatureModel& model, const MaterialParams& p, int trials, FieldRng& rng,
                                double tol) {
  InvarianceRow row;
  row.model = model.name();
  bool all_zero = true, all_constant = true;
  for (int t = 0; t < trials; ++t) {
    ConformalParams c = ConformalParams::random(rng);
    Poly3 w = w_curv(conformal_map(c), model, p);
    double wmax = w.max_abs_coeff();
    double wnc = nonconstant_coeff(w);
    row.max_density_coeff = std::max(row.max_density_coeff, wmax);
    row.max_nonconstant_coeff = std::max(row.max_nonconstant_coeff, wnc);
    all_zero = all_zero && wmax <= tol;
    all_constant = all_constant && wnc <= tol;

    double Wn2 = c.W_bar.squaredNorm();
    double w0 = w.coeff({0, 0, 0});
    switch (model.kind) {
      case ModelKind::ModifiedConformal:
        row.contract_ok = row.contract_ok && wmax <= tol;
        break;
      case ModelKind::HadjesfandiariDargush:
        row.contract_ok = row.contract_ok && wnc <= tol &&
                          std::abs(w0 - p.mu_L2() * model.coeffs[0] * Wn2) <= tol;
        break;
      case ModelKind::Indeterminate:
      case ModelKind::CurlSym:
        if (model.coeffs[1] == 0.0)
          row.contract_ok = row.contract_ok && wmax <= tol;
        else if (std::sqrt(Wn2) > 1e-6)
          row.contract_ok = row.contract_ok && wmax > tol;
        break;
      default:
        break;
    }
  }
  row.verdict = all_zero ? InvarianceVerdict::Invariant
                         : (all_constant ? InvarianceVerdict::ConstantDensity : InvarianceVerdict::NotInvariant);
  return row;
}

std::vector<InvarianceRow> invariance_report(const MaterialParams& p, int trials, FieldRng& rng, double tol) {
  std::vector<InvarianceRow> rows;
  for (ModelKind k : all_models()) rows.push_back(invariance_report(representative_model(k, p), p, trials, rng, tol));
  return rows;
}

}  // namespace cstress
