// One line per acceptance criterion. Exit status is nonzero if any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cstress/conformal.hpp"
#include "cstress/energy.hpp"
#include "cstress/grid_oracle.hpp"
#include "cstress/identities.hpp"
#include "cstress/lift.hpp"
#include "cstress/micromorphic.hpp"
#include "cstress/random_fields.hpp"
#include "cstress/solver.hpp"
#include "cstress/stress.hpp"
#include "cstress/tractions.hpp"

using namespace cstress;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

std::string vec(const Vec3& v) { return "(" + fmt(v(0)) + "," + fmt(v(1)) + "," + fmt(v(2)) + ")"; }

Poly3 X(int a) { return Poly3::var(a, 16); }
Poly3 Z() { return Poly3(0.0, 16); }
PolyVecField x1_squared() { return PolyVecField{{Z(), X(0) * X(0), Z()}}; }

MaterialParams alphas(double a1, double a2) {
  MaterialParams p;
  p.alpha1 = a1;
  p.alpha2 = a2;
  return p;
}

std::uint64_t g_seed = 20240601;

// 1. master identity on 100 fields of degree <= 4
Outcome master_identity(double& limit) {
  limit = 5.0;
  FieldRng rng(g_seed + 1);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    PolyVecField u = rng.vec_field(1 + t % 4);
    PolyMatField r = grad(axl_field(skw(grad(u)))) - curl_mat(sym(grad(u))).transpose();
    worst = std::max(worst, r.max_abs_coeff());
  }
  return {worst < 1e-12, "max coeff " + fmt(worst)};
}

// 2. stress duality, as stated: Div(tau^ - tau~) = 0
Outcome stress_duality(double& limit) {
  limit = 10.0;
  double skew_tau_hat = 0.0, sym_tau_tilde = 0.0, div_diff = 0.0, div_sum = 0.0, m_gap = 0.0;
  for (auto [a1, a2] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}}) {
    FieldRng rng(g_seed + 1);  // the same 100 fields as criterion 1
    for (int t = 0; t < 100; ++t) {
      StressState s = assemble(rng.vec_field(1 + t % 4).with_cap(16), alphas(a1, a2));
      sym_tau_tilde = std::max(sym_tau_tilde, sym(s.tau_tilde).max_abs_coeff());
      skew_tau_hat = std::max(skew_tau_hat, skw(s.tau_hat).max_abs_coeff());
      div_diff = std::max(div_diff, div_mat(s.tau_hat - s.tau_tilde).max_abs_coeff());
      div_sum = std::max(div_sum, div_mat(s.tau_hat + s.tau_tilde).max_abs_coeff());
      m_gap = std::max(m_gap, (sym(s.m_tilde) - sym(s.m_hat)).max_abs_coeff());
    }
  }
  const double tol = 1e-12;
  bool ok = sym_tau_tilde < tol && skew_tau_hat < tol && div_diff < tol && m_gap < tol;
  return {ok, "sym tau~ " + fmt(sym_tau_tilde) + ", skw tau^ " + fmt(skew_tau_hat) + ", Div(tau^-tau~) " +
                  fmt(div_diff) + ", sym m~ - sym m^ " + fmt(m_gap) + "; Div(tau^+tau~) " + fmt(div_sum)};
}

// 3. five energy forms and the Grioli shift
Outcome energy_forms(double& limit) {
  limit = 0.0;
  FieldRng rng(g_seed + 3);
  MaterialParams p = alphas(0.7, 1.3);
  double worst = 0.0, grioli = 0.0;
  for (int t = 0; t < 100; ++t) {
    PolyVecField u = rng.vec_field(1 + t % 4).with_cap(16);
    worst = std::max(worst, five_form_report(u, p).max_discrepancy);
    const double a1 = rng.uniform(0.1, 2.0), eta = rng.uniform(-1.0, 1.0);
    Poly3 g = w_curv(u, CurvatureModel::grioli(a1, eta), p);
    Poly3 i = w_curv(u, CurvatureModel::indeterminate(a1 + eta, a1 - eta), p);
    grioli = std::max(grioli, (g - i).max_abs_coeff());
  }
  return {worst < 1e-12 && grioli < 1e-12, "five forms " + fmt(worst) + ", Grioli " + fmt(grioli)};
}

// 4. conformal classification on 25 maps
Outcome conformal(double& limit) {
  limit = 0.0;
  FieldRng rng(g_seed + 4);
  MaterialParams p = alphas(1.0, 0.8);
  p.mu = 1.3;
  p.Lc = 0.9;
  double mc = 0.0, hd = 0.0, gd = 0.0;
  bool indet_ok = true;
  for (int t = 0; t < 25; ++t) {
    ConformalParams c = ConformalParams::random(rng);
    PolyVecField phi = conformal_map(c);
    mc = std::max(mc, w_curv(phi, CurvatureModel::modified_conformal(p.alpha1), p).max_abs_coeff());
    Poly3 h = w_curv(phi, CurvatureModel::hadjesfandiari_dargush(p.alpha2), p);
    Poly3 expect(p.mu_L2() * p.alpha2 * c.W_bar.squaredNorm());
    hd = std::max(hd, (h - expect).max_abs_coeff());
    Poly3 ind = w_curv(phi, CurvatureModel::indeterminate(p.alpha1, p.alpha2), p);
    if (c.W_bar.norm() > 1e-6 && ind.max_abs_coeff() == 0.0) indet_ok = false;
    PolyVecField gdiv = grad(div(phi));
    Poly3 g = dot(gdiv, gdiv) - Poly3(9.0 * axl(c.W_bar).squaredNorm());
    gd = std::max(gd, g.max_abs_coeff());
  }
  bool ok = mc < 1e-12 && hd < 1e-12 && indet_ok && gd < 1e-12;
  return {ok, "MC " + fmt(mc) + ", HD gap " + fmt(hd) + ", Indeterminate nonzero " + (indet_ok ? "yes" : "no") +
                  ", grad div gap " + fmt(gd)};
}

// 5. double forces for u = (0, x1^2, 0) on n = e1
Outcome double_forces(double& limit) {
  limit = 0.0;
  MaterialParams p = alphas(1.0, 0.0);
  p.mu = p.Lc = 1.0;
  DoubleForceComparison a = double_force_compare(x1_squared(), p, SurfacePoint::make(Vec3(1, 0.3, 0.6), Vec3::UnitX()));
  const bool curl_ok = (a.double_curl - Vec3(0, 0.5, 0)).norm() < 1e-12;
  const bool axl_ok = (a.double_axl - Vec3(0, -0.5, 0)).norm() < 1e-12;

  BoxFace f{0, 1};
  Poly3 b = face_bump(f).with_cap(16) * X(0);
  PolyVecField du{{b, 2.0 * b, 3.0 * b}};
  FaceWork wc = boundary_virtual_work(x1_squared(), du, p, f, TractionVariant::Curl);
  FaceWork wa = boundary_virtual_work(x1_squared(), du, p, f, TractionVariant::Axl);
  FaceWork wf = boundary_virtual_work(x1_squared(), du, p, f, TractionVariant::AxlFlippedAnti);
  const bool totals_ok = std::abs(wc.total() - wa.total()) <= 1e-8;
  const double termwise = std::max(std::abs(wc.traction_part - wa.traction_part),
                                   std::abs(wc.double_force_part - wa.double_force_part));
  const bool termwise_ok = termwise > 1e-3;
  std::string d = "curl " + vec(a.double_curl) + ", axl " + vec(a.double_axl) + " (expected (0,-0.5,0))" +
                  ", totals " + fmt(wc.total()) + " vs " + fmt(wa.total()) + ", termwise gap " + fmt(termwise) +
                  "; axl with flipped anti " + vec(a.double_axl_flipped) + " total " + fmt(wf.total());
  return {curl_ok && axl_ok && totals_ok && termwise_ok, d};
}

// 6. lift of the curvature energy to the second gradient
Outcome lift(double& limit) {
  limit = 0.0;
  FieldRng rng(g_seed + 6);
  CurvatureFourthOrder L = CurvatureFourthOrder::isotropic(1.0, 0.0);
  double worst = 0.0, rt_consistent = 0.0, rt_flipped = 0.0;
  for (int t = 0; t < 50; ++t) {
    PolyVecField u = rng.vec_field(1 + t % 4).with_cap(16);
    worst = std::max(worst, verify_energy_equality(L, u).discrepancy);
    rt_consistent = std::max(rt_consistent, reconstruction_round_trip(u, ReconstructionSigns::Consistent).max_error);
    rt_flipped = std::max(rt_flipped, reconstruction_round_trip(u, ReconstructionSigns::FlippedMiddle).max_error);
  }
  LiftReport e = verify_energy_equality(L, x1_squared());
  const double value_gap = (e.lhs - Poly3(1.0)).max_abs_coeff();
  bool ok = worst < 1e-12 && value_gap < 1e-12 && rt_consistent < 1e-12 && rt_flipped > 1e-12;
  return {ok, "discrepancy " + fmt(worst) + ", value " + fmt(e.lhs.integrate()) + ", round trip consistent " +
                  fmt(rt_consistent) + " flipped " + fmt(rt_flipped)};
}

// 7. Galerkin existence check
Outcome existence(double& limit) {
  limit = 60.0;
  MaterialParams p;
  p.mu = p.lambda = p.alpha1 = 1.0;
  p.alpha2 = 0.0;
  BasisSpec spec{BasisFamily::Bubble, 2};
  PolyVecField f{{Poly3(1.0), Poly3(1.0), Poly3(1.0)}};
  AssembledSystem curl = assemble(spec, p, f, CurvatureForm::Curl);
  AssembledSystem ax = assemble(spec, p, f, CurvatureForm::Axl);
  SolveReport s = solve(curl);
  const double kgap = (curl.K - ax.K).cwiseAbs().maxCoeff();
  ManufacturedReport m = manufactured_check(spec, p);
  bool ok = s.min_eigenvalue > 0.0 && m.x0_error < 1e-8 && kgap < 1e-12;
  return {ok, "min eig " + fmt(s.min_eigenvalue) + ", K_axl - K_curl " + fmt(kgap) + ", manufactured X0 error " +
                  fmt(m.x0_error) + " (" + fmt(m.x0_error_with_boundary) + " with boundary double-force work)"};
}

// 8. penalty limits
Outcome penalty(double& limit) {
  limit = 120.0;
  MaterialParams p = alphas(1.0, 0.5);
  FieldRng rng(g_seed + 8);
  PolyVecField f = rng.vec_field(2);
  const std::vector<double> ladder{1, 1e2, 1e4, 1e6};
  bool ok = true;
  std::string d;
  for (auto m : {MicromorphicModel::Cosserat, MicromorphicModel::Microstrain}) {
    LimitStudy s = penalty_limit_study(MicromorphicSpec::from_params(m, p), p, 2, f, ladder);
    ok = ok && s.constrained.has_value() && s.pass();
    d += to_string(m) + ": violation " + fmt(s.rows.front().violation) + " -> " + fmt(s.rows.back().violation) +
         ", energy " + fmt(s.rows.back().energy) + " <= " + (s.constrained ? fmt(*s.constrained) : "n/a") + "; ";
  }
  return {ok, d};
}

// 9. finite-difference oracle
Outcome oracle_orders(double& limit) {
  limit = 0.0;
  auto rows = oracle::convergence_suite(g_seed + 9, 10, 4, 1.9);
  bool ok = !rows.empty();
  double lo = 1e300;
  std::string worst;
  for (const auto& r : rows) {
    ok = ok && r.pass && r.min_order >= 1.9;
    if (r.min_order < lo) {
      lo = r.min_order;
      worst = r.op;
    }
  }
  return {ok, std::to_string(rows.size()) + " operators, lowest order " + fmt(lo) + " (" + worst + ")"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_seed = std::stoull(argv[1]);
  const std::vector<std::pair<const char*, Outcome (*)(double&)>> criteria{
      {"master identity", master_identity}, {"stress duality", stress_duality},
      {"energy forms", energy_forms},       {"conformal classification", conformal},
      {"double forces", double_forces},     {"lift", lift},
      {"existence", existence},             {"penalty limits", penalty},
      {"oracle orders", oracle_orders}};
  int failed = 0;
  std::cout << "acceptance seed " << g_seed << "\n";
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    double limit = 0.0;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(limit);
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0.0 && secs >= limit) {
      o.pass = false;
      o.detail += ", over time limit " + fmt(limit) + " s";
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ["
              << std::fixed << std::setprecision(2) << secs << " s]  " << std::defaultfloat << o.detail << "\n";
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : std::string("all criteria pass")) << "\n";
  return failed ? 1 : 0;
}
