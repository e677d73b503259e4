#include <gtest/gtest.h>

#include "cstress/random_fields.hpp"
#include "cstress/stress.hpp"

using namespace cstress;

namespace {

Poly3 X(int a) { return Poly3::var(a); }
const Poly3 Z(0.0);

Mat3 m3(std::initializer_list<double> v) {
  Mat3 M;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M(i, j) = *it++;
  return M;
}

MaterialParams params(double a1, double a2) {
  MaterialParams p;
  p.alpha1 = a1;
  p.alpha2 = a2;
  return p;
}

}  // namespace

TEST(StressAssembly, LinearField) {
  StressState s = assemble(PolyVecField{{X(0), Z, Z}}, params(1, 0));
  EXPECT_LT((s.sigma.eval(Vec3(0.2, 0.3, 0.4)) - Vec3(3, 1, 1).asDiagonal().toDenseMatrix()).norm(), 1e-15);
  EXPECT_EQ(s.sigma.degree(), 0);
  for (const PolyMatField* m : {&s.m_tilde, &s.m_hat, &s.tau_tilde, &s.tau_hat}) EXPECT_EQ(m->max_abs_coeff(), 0.0);
}

TEST(StressAssembly, CubicShear) {
  StressState s = assemble(PolyVecField{{X(1) * X(1) * X(1), Z, Z}}, params(1, 0));
  const Vec3 x(0.3, 0.6, 0.8);
  EXPECT_LT((s.tau_tilde.eval(x) - m3({0, 1.5, 0, -1.5, 0, 0, 0, 0, 0})).norm(), 1e-14);
  EXPECT_LT((s.tau_hat.eval(x) - m3({0, -1.5, 0, -1.5, 0, 0, 0, 0, 0})).norm(), 1e-14);
}

TEST(StressAssembly, SymbolicOracleValues) {
  // u = (x2^2 x3, x1 x3^2, x1^2 x2), all moduli 1, at (0.3, 0.5, 0.7); values from the sympy oracle
  PolyVecField u{{X(1) * X(1) * X(2), X(0) * X(2) * X(2), X(0) * X(0) * X(1)}};
  StressState s = assemble(u, params(1, 1));
  const Vec3 x(0.3, 0.5, 0.7);
  EXPECT_LT((s.m_hat.eval(x) - m3({-0.8, -1, 0, 0, 0.4, -1.4, -0.6, 0, 0.4})).norm(), 1e-14);
  EXPECT_LT((s.tau_hat.eval(x) - m3({0, -1, -1, -1, 0, -1, -1, -1, 0})).norm(), 1e-14);
}

TEST(StressAssembly, QuadraticShearCoupleStresses) {
  StressState s = assemble(PolyVecField{{Z, X(0) * X(0), Z}}, params(1, 0));
  const Mat3 expect = m3({0, 0, 1, 0, 0, 0, 1, 0, 0});
  EXPECT_LT((s.m_hat.eval(Vec3(0.5, 0.5, 0.5)) - expect).norm(), 1e-15);
  EXPECT_LT((s.m_tilde.eval(Vec3(0.5, 0.5, 0.5)) - expect).norm(), 1e-15);
}

TEST(StressAssembly, CoupleStressRelations) {
  FieldRng rng(41);
  for (int t = 0; t < 10; ++t) {
    PolyVecField u = rng.vec_field(4).with_cap(16);
    EXPECT_LT(couple_stress_relation_check(u, params(0.7, 1.3)).sym_gap, 1e-12);
    auto r0 = couple_stress_relation_check(u, params(0, 1));
    EXPECT_LT(r0.opposite_gap, 1e-12);
    auto r1 = couple_stress_relation_check(u, params(1, 0));
    EXPECT_LT(r1.equal_gap, 1e-12);
  }
}

TEST(StressAssembly, DualityStructure) {
  FieldRng rng(43);
  for (auto [a1, a2] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}})
    for (int t = 0; t < 10; ++t) {
      StressState s = assemble(rng.vec_field(4).with_cap(16), params(a1, a2));
      EXPECT_LT(sym(s.tau_tilde).max_abs_coeff(), 1e-12);
      EXPECT_LT(skw(s.tau_hat).max_abs_coeff(), 1e-12);
      EXPECT_LT(div_mat(s.tau_hat + s.tau_tilde).max_abs_coeff(), 1e-12);
    }
}

TEST(StressAssembly, DifferenceOfNonlocalStressesIsNotDivergenceFree) {
  // the two non-local stresses balance with opposite signs: Div tau^ = -Div tau~, not +Div tau~
  FieldRng rng(43);
  StressState s = assemble(rng.vec_field(4).with_cap(16), params(1, 0));
  EXPECT_GT(div_mat(s.tau_hat - s.tau_tilde).max_abs_coeff(), 1e-3);
}

TEST(StressAssembly, NonlocalBalanceOnQuarticField) {
  // sympy oracle (tests/oracle/duality_check.py), all moduli 1
  PolyVecField u{{X(0) * X(0) * X(1) * X(2) + X(1) * X(1) * X(1) * X(1), X(0) * X(2) * X(2) * X(2),
                  X(0) * X(0) * X(1) * X(1)}};
  for (auto [a1, a2, scale] : {std::tuple{1.0, 0.0, 1.0}, {0.0, 1.0, 1.0}, {1.0, 1.0, 2.0}}) {
    StressState s = assemble(u, params(a1, a2));
    PolyVecField d = div_mat(s.tau_hat - s.tau_tilde);
    EXPECT_LT((d.eval(Vec3(0.3, 0.5, 0.7)) - scale * Vec3(-12, 0, -4)).norm(), 1e-12);
    EXPECT_LT(div_mat(s.tau_hat + s.tau_tilde).max_abs_coeff(), 1e-12);
  }
}

TEST(StressAssembly, BothEquilibriumFormsAgree) {
  FieldRng rng(47);
  MaterialParams p = params(1, 0.5);
  PolyVecField u = rng.vec_field(4).with_cap(16);
  PolyVecField f = manufactured_load(u, p);
  EXPECT_LT(equilibrium_residual(u, f, p, Formulation::Curl).max_abs_coeff(), 1e-12);
  EXPECT_LT(equilibrium_residual(u, f, p, Formulation::Axl).max_abs_coeff(), 1e-12);
  PolyVecField zero{{Z, Z, Z}};
  EXPECT_EQ(equilibrium_residual(zero, zero, p, Formulation::Curl).max_abs_coeff(), 0.0);
}
