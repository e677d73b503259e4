#include <gtest/gtest.h>

#include "cstress/energy.hpp"
#include "cstress/random_fields.hpp"

using namespace cstress;

namespace {

Poly3 X(int a) { return Poly3::var(a); }
const Poly3 Z(0.0);

}  // namespace

TEST(EnergyZoo, ElasticDensity) {
  MaterialParams p;
  FieldRng rng(2);
  Mat3 W = rng.antisym();
  Vec3 b = rng.vec();
  PolyVecField rigid;
  for (int i = 0; i < 3; ++i) rigid[i] = Poly3(b(i)) + W(i, 0) * X(0) + W(i, 1) * X(1) + W(i, 2) * X(2);
  EXPECT_LT(w_lin(rigid, p).max_abs_coeff(), 1e-15);

  Poly3 w = w_lin(PolyVecField{{X(0), Z, Z}}, p);
  EXPECT_NEAR(w.coeff({0, 0, 0}), 1.5, 1e-15);
  EXPECT_EQ(w.degree(), 0);
}

TEST(EnergyZoo, SplitFormMatches) {
  MaterialParams p;
  p.mu = 1.7;
  p.lambda = -0.4;
  FieldRng rng(6);
  for (int t = 0; t < 10; ++t) {
    PolyVecField u = rng.vec_field(3);
    EXPECT_LT((w_lin(u, p) - w_lin_split(u, p)).max_abs_coeff(), 1e-12);
  }
}

TEST(EnergyZoo, CurvatureTensorsHandExamples) {
  CurvatureTensors a = curvature_tensors(PolyVecField{{X(1) * X(1), Z, Z}});
  EXPECT_EQ(a.k_tilde(2, 1).coeff({0, 0, 0}), -1.0);
  PolyMatField kt = a.k_tilde;
  kt(2, 1) += Poly3(1.0);
  EXPECT_EQ(kt.max_abs_coeff(), 0.0);
  EXPECT_LT((a.k_hat - a.k_tilde.transpose()).max_abs_coeff(), 1e-15);

  CurvatureTensors b = curvature_tensors(PolyVecField{{Z, X(0) * X(0), Z}});
  EXPECT_EQ(b.k_hat(0, 2).coeff({0, 0, 0}), 1.0);
  PolyMatField kh = b.k_hat;
  kh(0, 2) -= Poly3(1.0);
  EXPECT_EQ(kh.max_abs_coeff(), 0.0);
}

TEST(EnergyZoo, QuadraticFieldHasConstantCurvature) {
  FieldRng rng(13);
  CurvatureTensors c = curvature_tensors(rng.vec_field(2));
  EXPECT_LE(c.k_tilde.degree(), 0);
  EXPECT_LE(c.k_hat.degree(), 0);
}

TEST(EnergyZoo, IndeterminateDensityOfQuadraticShear) {
  // k^ = e1 (x) e3, |dev sym k^|^2 = 1/2; density mu Lc^2 alpha1 |dev sym k^|^2 = 1/2
  MaterialParams p;
  Poly3 w = w_curv(PolyVecField{{Z, X(0) * X(0), Z}}, CurvatureModel::indeterminate(1, 0), p);
  EXPECT_NEAR(w.coeff({0, 0, 0}), 0.5, 1e-15);
  EXPECT_EQ(w.degree(), 0);
}

TEST(EnergyZoo, CurlFreeFieldHasNoCurvatureEnergy) {
  FieldRng rng(17);
  PolyVecField u = grad(rng.poly(4));
  MaterialParams p;
  for (auto m : {CurvatureModel::indeterminate(1, 1), CurvatureModel::curl_sym(1, 1),
                 CurvatureModel::modified_conformal(1), CurvatureModel::hadjesfandiari_dargush(1)})
    EXPECT_LT(w_curv(u, m, p).max_abs_coeff(), 1e-12) << m.name();
}

TEST(EnergyZoo, FiveFormsAgree) {
  MaterialParams p;
  EXPECT_TRUE(five_form_report(PolyVecField{{Z, Z, Z}}, p).pass);
  EXPECT_TRUE(five_form_report(PolyVecField{{Z, X(0) * X(0), Z}}, p).pass);
  FieldRng rng(29);
  for (auto [a1, a2] : {std::pair{1.0, 0.0}, {0.0, 1.0}, {0.7, 1.3}}) {
    p.alpha1 = a1;
    p.alpha2 = a2;
    for (int t = 0; t < 10; ++t) {
      FiveFormReport r = five_form_report(rng.vec_field(4).with_cap(16), p);
      EXPECT_TRUE(r.pass);
      EXPECT_LT(r.max_discrepancy, 1e-12);
    }
  }
}

TEST(EnergyZoo, GrioliIsIndeterminateWithShiftedCoefficients) {
  MaterialParams p;
  FieldRng rng(31);
  for (int t = 0; t < 10; ++t) {
    PolyVecField u = rng.vec_field(4).with_cap(16);
    const double a1 = rng.uniform(0.1, 2.0), eta = rng.uniform(-1.0, 1.0);
    Poly3 g = w_curv(u, CurvatureModel::grioli(a1, eta), p);
    Poly3 i = w_curv(u, CurvatureModel::indeterminate(a1 + eta, a1 - eta), p);
    EXPECT_LT((g - i).max_abs_coeff(), 1e-12);
  }
}

TEST(EnergyZoo, ModelRegistry) {
  for (ModelKind k : all_models()) {
    CurvatureModel m = representative_model(k, MaterialParams{});
    EXPECT_EQ(m.coeffs.size(), coefficient_count(k));
    CurvatureModel back = CurvatureModel::from_name(m.name(), m.coeffs);
    EXPECT_EQ(back.kind, k);
  }
  EXPECT_THROW(CurvatureModel::from_name("Nonsense", {}), UnknownModel);
  EXPECT_THROW(CurvatureModel::from_name("Indeterminate", {1.0}), UnknownModel);
}
