#include "cstress/solver.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "cstress/stress.hpp"

namespace cstress {

std::string to_string(BasisFamily f) { return f == BasisFamily::Bubble ? "bubble" : "sine"; }

BasisFamily basis_family_from_name(const std::string& s) {
  if (s == "bubble" || s == "bubble-polynomial") return BasisFamily::Bubble;
  if (s == "sine") return BasisFamily::Sine;
  throw std::invalid_argument("unknown basis family '" + s + "'");
}

SeparableBasis make_displacement_basis(const BasisSpec& spec) {
  if (spec.N < 1 || spec.N > kMaxModes)
    throw std::invalid_argument("modes per axis must lie in [1, " + std::to_string(kMaxModes) + "]");
  SeparableBasis B;
  B.ncomp = 3;
  std::vector<Eigen::VectorXd> dirs;
  for (int c = 0; c < 3; ++c) dirs.push_back(Eigen::VectorXd::Unit(3, c));
  B.append_block(spec.family == BasisFamily::Bubble ? bubble_family(spec.N) : sine_family(spec.N), dirs);
  return B;
}

namespace {

Mat3 k_hat(const JetView& j, int off) { return curl_from_grad(sym_grad_from_hess(j.hess_vec(off))); }

// grad axl(skw grad u): k~_il = -1/2 eps_ijk u_{j,kl}
Mat3 k_tilde(const JetView& j, int off) {
  Ten3 D = j.hess_vec(off);
  Mat3 K = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (int e = levi_civita(i, a, b)) K(i, l) -= 0.5 * e * D(a, b, l);
  return K;
}

Eigen::MatrixXd to_double(const MatXR& A) { return A.cast<double>(); }

}  // namespace

QuadraticDensity elastic_density(const MaterialParams& p, int ncomp, int off) {
  QuadraticDensity d(ncomp);
  d.add(p.mu, [off](const JetView& j) { return flat_mat(sym(j.grad_vec(off))); });
  d.add(0.5 * p.lambda, [off](const JetView& j) {
    Eigen::VectorXd v(1);
    v(0) = j.grad_vec(off).trace();
    return v;
  });
  return d;
}

QuadraticDensity curvature_density(const MaterialParams& p, CurvatureForm form, double a1, double a2, int ncomp,
                                   int off) {
  QuadraticDensity d(ncomp);
  auto k = [form, off](const JetView& j) { return form == CurvatureForm::Curl ? k_hat(j, off) : k_tilde(j, off); };
  d.add(p.mu_L2() * a1, [k](const JetView& j) { return flat_mat(dev_sym(k(j))); });
  d.add(p.mu_L2() * a2, [k](const JetView& j) { return flat_mat(skw(k(j))); });
  return d;
}

QuadraticDensity x0_density() {
  QuadraticDensity d(3);
  d.add(1.0, [](const JetView& j) { return flat_mat(j.grad_vec(0)); });
  d.add(1.0, [](const JetView& j) { return flat_mat(k_hat(j, 0)); });
  return d;
}

QuadraticDensity mass_density() {
  QuadraticDensity d(3);
  d.add(1.0, [](const JetView& j) { return Eigen::VectorXd(j.vec(0)); });
  return d;
}

AssembledSystem assemble(const BasisSpec& spec, const MaterialParams& p, const PolyVecField& f, CurvatureForm form) {
  p.validate_for_solve();
  AssembledSystem s;
  s.spec = spec;
  s.form = form;
  s.basis = make_displacement_basis(spec);
  MatXR A = assemble_form(s.basis, elastic_density(p)) +
            assemble_form(s.basis, curvature_density(p, form, p.alpha1, p.alpha2));
  s.K = to_double(Real(2) * A);
  s.b = assemble_load(s.basis, f).cast<double>();
  s.G = to_double(assemble_form(s.basis, x0_density()));
  s.M = to_double(assemble_form(s.basis, mass_density()));
  return s;
}

double quadratic_energy(const AssembledSystem& sys, const Eigen::VectorXd& c) {
  return 0.5 * c.dot(sys.K * c) - sys.b.dot(c);
}

double coercivity_estimate(const AssembledSystem& sys) {
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.K, sys.G, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw FactorizationFailure("generalised eigen-solve failed");
  return es.eigenvalues().minCoeff();
}

SolveReport solve(const AssembledSystem& sys) {
  SolveReport r;
  r.dimension = static_cast<int>(sys.K.rows());
  const double kmax = sys.K.cwiseAbs().maxCoeff();
  r.symmetry_gap = kmax > 0 ? (sys.K - sys.K.transpose()).cwiseAbs().maxCoeff() / kmax : 0.0;
  Eigen::LLT<Eigen::MatrixXd> llt(sys.K);
  if (llt.info() != Eigen::Success) throw FactorizationFailure("Cholesky factorisation of the stiffness failed");
  r.c = llt.solve(sys.b);
  const double bn = sys.b.norm();
  r.residual = bn > 0 ? (sys.K * r.c - sys.b).norm() / bn : (sys.K * r.c).norm();
  r.energy = -0.5 * sys.b.dot(r.c);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sys.K, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.coercivity = coercivity_estimate(sys);
  return r;
}

Eigen::VectorXd project(const AssembledSystem& sys, const PolyVecField& u) {
  Eigen::VectorXd m = assemble_load(sys.basis, u).cast<double>();
  return sys.M.llt().solve(m);
}

double x0_norm(const AssembledSystem& sys, const Eigen::VectorXd& c) { return std::sqrt(std::max(0.0, c.dot(sys.G * c))); }

PolyVecField solution_field(const AssembledSystem& sys, const Eigen::VectorXd& c) {
  auto polys = to_polys(sys.basis, c.cast<Real>(), kSolverDegreeCap);
  return PolyVecField{{polys[0], polys[1], polys[2]}};
}

Vec3 evaluate_solution(const AssembledSystem& sys, const Eigen::VectorXd& c, const Vec3& x) {
  return evaluate(sys.basis, c.cast<Real>(), x);
}

Poly3 box_bubble(int cap) {
  Poly3 b(1.0, cap);
  for (int ax = 0; ax < 3; ++ax) {
    Poly3 x = Poly3::var(ax, cap);
    b = b * (x * (Poly3(1.0, cap) - x));
  }
  return b;
}

namespace {

// exact integral of p over the face x_axis = side
double face_integral(const Poly3& p, int axis, int side) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) {
    if (!side && e[axis] != 0) continue;
    double v = c;
    for (int a = 0; a < 3; ++a)
      if (a != axis) v /= e[a] + 1;
    s += v;
  }
  return s;
}

}  // namespace

Eigen::VectorXd boundary_double_force_work(const AssembledSystem& sys, const PolyVecField& u, const MaterialParams& p) {
  StressState st = assemble(u.with_cap(2 * kSolverDegreeCap), p);
  const int n = static_cast<int>(sys.K.rows());
  Eigen::VectorXd w(n);
  for (int a = 0; a < n; ++a) {
    PolyMatField P = sym(grad(solution_field(sys, Eigen::VectorXd::Unit(n, a)).with_cap(2 * kSolverDegreeCap)));
    double tot = 0.0;
    for (int ax = 0; ax < 3; ++ax) {
      const int j = (ax + 1) % 3, k = (ax + 2) % 3;
      Poly3 g(0.0, 2 * kSolverDegreeCap);
      for (int i = 0; i < 3; ++i) g += P(i, j) * st.m_hat(i, k) - P(i, k) * st.m_hat(i, j);
      tot += face_integral(g, ax, 1) - face_integral(g, ax, 0);
    }
    w(a) = tot;
  }
  return w;
}

ManufacturedReport manufactured_check(const BasisSpec& spec, const MaterialParams& p, double tol, CurvatureForm form) {
  Poly3 B = box_bubble();
  PolyVecField u{{B, B, B}};
  PolyVecField f = manufactured_load(u, p);
  AssembledSystem sys = assemble(spec, p, f, form);
  SolveReport r = solve(sys);
  Eigen::VectorXd cstar = project(sys, u);
  ManufacturedReport m;
  m.x0_error = x0_norm(sys, r.c - cstar);
  m.residual = r.residual;
  const double bmax = std::max(1.0, sys.b.cwiseAbs().maxCoeff());
  m.galerkin_orthogonality = (sys.K * (r.c - cstar)).cwiseAbs().maxCoeff() / bmax;
  m.energy = r.energy;
  m.quadratic_energy = quadratic_energy(sys, r.c);
  Eigen::VectorXd w = boundary_double_force_work(sys, u, p);
  m.boundary_work_max = w.cwiseAbs().maxCoeff();
  m.x0_error_with_boundary = x0_norm(sys, sys.K.llt().solve(sys.b + w) - cstar);
  m.pass = m.x0_error <= tol;
  return m;
}

CurvatureRatioReport curvature_ratio_check(const PolyVecField& u0) {
  PolyVecField u = u0.with_cap(4 * kSolverDegreeCap);
  PolyMatField e = sym(grad(u));
  PolyMatField k = curl_mat(e);
  const double se = frob2(e).integrate();
  CurvatureRatioReport r;
  r.lhs = se + frob2(sym(k)).integrate();
  r.rhs = se + frob2(k).integrate();
  r.degenerate = r.lhs == 0.0 && r.rhs == 0.0;
  r.ratio = r.degenerate ? 0.0 : r.rhs / r.lhs;
  return r;
}

nlohmann::json to_json(const SolveReport& r) {
  return {{"dimension", r.dimension},
          {"energy", r.energy},
          {"residual", r.residual},
          {"coercivity", r.coercivity},
          {"min_eigenvalue", r.min_eigenvalue},
          {"symmetry_gap", r.symmetry_gap},
          {"factorization", r.factorization},
          {"coefficients", std::vector<double>(r.c.data(), r.c.data() + r.c.size())}};
}

}  // namespace cstress
