#include <gtest/gtest.h>

#include <cmath>

#include "cstress/random_fields.hpp"
#include "cstress/solver.hpp"
#include "cstress/stress.hpp"

using namespace cstress;

namespace {

PolyVecField constant_load(double a = 1.0) { return PolyVecField{{Poly3(a), Poly3(a), Poly3(a)}}; }

}  // namespace

TEST(VariationalSolver, BubbleRitzEnergiesMatchSymbolicOracle) {
  // exact Ritz energies for f = (1,1,1), mu = lambda = Lc = alpha1 = 1, alpha2 = 0 (sympy, rational arithmetic)
  MaterialParams p;
  AssembledSystem s1 = assemble(BasisSpec{BasisFamily::Bubble, 1}, p, constant_load());
  EXPECT_NEAR(s1.K(0, 0), 7.0 / 900, 1e-15);
  EXPECT_NEAR(s1.b(0), 1.0 / 216, 1e-16);
  EXPECT_NEAR(solve(s1).energy, -25.0 / 6048, 1e-15);
  AssembledSystem s2 = assemble(BasisSpec{BasisFamily::Bubble, 2}, p, constant_load());
  EXPECT_NEAR(solve(s2).energy, -1375.0 / 308336, 1e-15);
}

TEST(VariationalSolver, AxlAndCurlStiffnessCoincide) {
  MaterialParams p;
  p.alpha2 = 0.6;
  for (int N = 1; N <= 3; ++N) {
    AssembledSystem a = assemble(BasisSpec{BasisFamily::Bubble, N}, p, constant_load(), CurvatureForm::Axl);
    AssembledSystem c = assemble(BasisSpec{BasisFamily::Bubble, N}, p, constant_load(), CurvatureForm::Curl);
    EXPECT_LT((a.K - c.K).cwiseAbs().maxCoeff(), 1e-12) << N;
  }
}

TEST(VariationalSolver, SpdCoercivityAndMonotoneEnergy) {
  MaterialParams p;
  double prev_coer = 1e300, prev_energy = 0.0;
  for (int N = 1; N <= 3; ++N) {
    SolveReport r = solve(assemble(BasisSpec{BasisFamily::Bubble, N}, p, constant_load()));
    EXPECT_GT(r.min_eigenvalue, 0.0);
    EXPECT_GT(r.coercivity, 0.0);
    EXPECT_LE(r.coercivity, prev_coer + 1e-12);
    EXPECT_LT(r.energy, prev_energy);  // nested spaces
    EXPECT_LT(r.symmetry_gap, 1e-14);
    EXPECT_LT(r.residual, 1e-12);
    prev_coer = r.coercivity;
    prev_energy = r.energy;
  }
}

TEST(VariationalSolver, ZeroLoadGivesZeroSolution) {
  MaterialParams p;
  PolyVecField zero{{Poly3(0.0), Poly3(0.0), Poly3(0.0)}};
  SolveReport r = solve(assemble(BasisSpec{BasisFamily::Bubble, 2}, p, zero));
  EXPECT_EQ(r.c.norm(), 0.0);
  EXPECT_EQ(r.energy, 0.0);
}

TEST(VariationalSolver, EnergyIdentities) {
  MaterialParams p;
  p.alpha2 = 0.3;
  FieldRng rng(121);
  AssembledSystem s = assemble(BasisSpec{BasisFamily::Bubble, 2}, p, rng.vec_field(2));
  SolveReport r = solve(s);
  EXPECT_NEAR(quadratic_energy(s, r.c), r.energy, 1e-15);
  // minimiser: any perturbation raises the energy
  for (int t = 0; t < 5; ++t) {
    Eigen::VectorXd d = Eigen::VectorXd::Random(r.c.size()) * 1e-3;
    EXPECT_GT(quadratic_energy(s, r.c + d), r.energy);
  }
  PolyVecField u = solution_field(s, r.c);
  EXPECT_LT((evaluate_solution(s, r.c, Vec3(0.3, 0.6, 0.2)) - u.eval(Vec3(0.3, 0.6, 0.2))).norm(), 1e-14);
}

TEST(VariationalSolver, SineBasis) {
  MaterialParams p;
  SolveReport r = solve(assemble(BasisSpec{BasisFamily::Sine, 2}, p, constant_load()));
  EXPECT_GT(r.min_eigenvalue, 0.0);
  EXPECT_LT(r.energy, 0.0);
  EXPECT_LT(r.residual, 1e-12);
}

TEST(VariationalSolver, RejectsInadmissibleParameters) {
  MaterialParams p;
  p.alpha1 = 0.0;
  EXPECT_THROW(assemble(BasisSpec{BasisFamily::Bubble, 1}, p, constant_load()), InadmissibleParams);
  p = MaterialParams{};
  p.lambda = -1.0;  // 3 lambda + 2 mu < 0
  EXPECT_THROW(assemble(BasisSpec{BasisFamily::Bubble, 1}, p, constant_load()), InadmissibleParams);
  EXPECT_THROW(make_displacement_basis(BasisSpec{BasisFamily::Bubble, kMaxModes + 1}), std::invalid_argument);
}

TEST(VariationalSolver, ManufacturedSolutionNeedsBoundaryDoubleForceWork) {
  // Test fields vanish on the boundary but their normal derivatives do not, so the
  // double-force pairing on the boundary stays in the weak form: K c* = b + w.
  MaterialParams p;
  p.alpha2 = 0.0;
  BasisSpec spec{BasisFamily::Bubble, 2};
  Poly3 B = box_bubble();
  PolyVecField u{{B, B, B}};
  AssembledSystem s = assemble(spec, p, manufactured_load(u, p));
  Eigen::VectorXd cstar = project(s, u);
  Eigen::VectorXd w = boundary_double_force_work(s, u, p);
  EXPECT_LT((s.K * cstar - s.b - w).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_GT(w.cwiseAbs().maxCoeff(), 1e-4);

  ManufacturedReport m = manufactured_check(spec, p);
  EXPECT_LT(m.x0_error_with_boundary, 1e-10);
  EXPECT_NEAR(m.x0_error, 0.0515448, 1e-6);
  EXPECT_FALSE(m.pass);
}

TEST(VariationalSolver, CurvatureRatio) {
  CurvatureRatioReport z = curvature_ratio_check(PolyVecField{{Poly3(0.0), Poly3(0.0), Poly3(0.0)}});
  EXPECT_TRUE(z.degenerate);
  Poly3 B = box_bubble();
  CurvatureRatioReport r = curvature_ratio_check(PolyVecField{{B, B, B}});
  EXPECT_FALSE(r.degenerate);
  EXPECT_TRUE(std::isfinite(r.ratio));
  EXPECT_GE(r.ratio, 1.0);
}
