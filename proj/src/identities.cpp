#include "cstress/identities.hpp"

#include <cmath>

namespace cstress {

Vec3 witness_point(const PolyMatField& residual) {
  Vec3 best = Vec3::Zero();
  double bestv = -1.0;
  const int n = 6;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        Vec3 x(double(i) / n, double(j) / n, double(k) / n);
        double v = residual.eval(x).cwiseAbs().maxCoeff();
        if (v > bestv) {
          bestv = v;
          best = x;
        }
      }
  return best;
}

namespace {

IdentityReport make_report(std::string name, const PolyMatField& residual, double tol) {
  IdentityReport r;
  r.name = std::move(name);
  r.discrepancy = residual.max_abs_coeff();
  r.pass = r.discrepancy <= tol;
  if (!r.pass) r.witness = witness_point(residual);
  return r;
}

PolyMatField gradient_of_axl_skw(const PolyMatField& p) { return grad(axl_field(skw(p))); }

}  // namespace

IdentityReport nye_check(const PolyMatField& A, double tol) {
  PolyVecField a = axl_field(A, tol);  // rejects a non-antisymmetric field
  PolyMatField kappa = grad(a);
  PolyMatField C = curl_mat(A);
  PolyMatField r1 = -1.0 * C - (kappa.transpose() - PolyMatField::identity_times(kappa.trace()));
  PolyMatField r2 = kappa - (-1.0 * C.transpose() + PolyMatField::identity_times(0.5 * C.trace()));
  IdentityReport a1 = make_report("nye", r1, tol);
  IdentityReport a2 = make_report("nye_inverse", r2, tol);
  if (a2.discrepancy > a1.discrepancy) {
    a2.name = "nye";
    return a2;
  }
  return a1;
}

IdentityReport master_identity_check(const PolyVecField& u, double tol) {
  PolyMatField G = grad(u);
  return make_report("master_identity", gradient_of_axl_skw(G) - curl_mat(sym(G)).transpose(), tol);
}

ConverseResult master_identity_converse(const PolyMatField& p, double tol) {
  ConverseResult r;
  r.report = make_report("master_identity_converse", gradient_of_axl_skw(p) - curl_mat(sym(p)).transpose(), tol);
  r.is_gradient = curl_mat(p).max_abs_coeff() <= tol;
  return r;
}

IdentityReport curl_transpose_check(const PolyVecField& u, double tol) {
  return make_report("curl_transpose", grad(curl_vec(u)).transpose() - curl_mat(grad(u).transpose()), tol);
}

PolyMatField saint_venant_inc(const PolyMatField& eps, double tol) {
  if (skw(eps).max_abs_coeff() > tol) throw std::invalid_argument("inc: strain field is not symmetric");
  return curl_mat(curl_mat(eps).transpose());
}

PolyMatField first_order_inc(const PolyMatField& p) {
  return curl_mat(sym(p)).transpose() - gradient_of_axl_skw(p);
}

IdentityReport trace_relations_check(const PolyMatField& p, double tol) {
  Poly3 r1 = curl_mat(p).trace() - 2.0 * div(axl_field(skw(p)));
  Poly3 r2 = curl_mat(sym(p)).trace();
  PolyMatField res;
  res(0, 0) = r1;
  res(1, 1) = r2;
  return make_report("trace_relations", res, tol);
}

IdentityReport inc_curl_check(const PolyMatField& p, double tol) {
  return make_report("inc_curl", curl_mat(first_order_inc(p)) - saint_venant_inc(sym(p)), tol);
}

PolyMatField incompatible_field(const PolyVecField& u, int row, int col, const Exp& e, double c) {
  PolyMatField p = grad(u);
  p(row, col) += Poly3::monomial(e, c, p(row, col).cap());
  return p;
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j = {{"identity", r.name}, {"discrepancy", r.discrepancy}, {"pass", r.pass}};
  if (r.witness) j["witness"] = {(*r.witness)(0), (*r.witness)(1), (*r.witness)(2)};
  return j;
}

}  // namespace cstress
