#include <gtest/gtest.h>

#include "cstress/random_fields.hpp"
#include "cstress/tensor.hpp"

using namespace cstress;

namespace {

Mat3 m3(std::initializer_list<double> v) {
  Mat3 M;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M(i, j) = *it++;
  return M;
}

}  // namespace

TEST(TensorCore, CartanIdentityIsSpherical) {
  Cartan c = cartan_decompose(Mat3::Identity());
  EXPECT_LT(c.devsym.norm(), 1e-15);
  EXPECT_LT(c.skew.norm(), 1e-15);
  EXPECT_LT((c.spherical - Mat3::Identity()).norm(), 1e-15);
}

TEST(TensorCore, CartanAntisymmetricInput) {
  Mat3 X = anti(Vec3(1, 2, 3));
  Cartan c = cartan_decompose(X);
  EXPECT_LT(c.devsym.norm(), 1e-15);
  EXPECT_LT((c.skew - X).norm(), 1e-15);
  EXPECT_LT(c.spherical.norm(), 1e-15);
}

TEST(TensorCore, CartanHandEvaluated) {
  Cartan c = cartan_decompose(m3({1, 2, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_LT((c.devsym - m3({2.0 / 3, 1, 0, 1, -1.0 / 3, 0, 0, 0, -1.0 / 3})).norm(), 1e-15);
  EXPECT_LT((c.skew - m3({0, 1, 0, -1, 0, 0, 0, 0, 0})).norm(), 1e-15);
  EXPECT_LT((c.spherical - Mat3::Identity() / 3).norm(), 1e-15);
}

TEST(TensorCore, CartanPartsAreOrthogonalAndSum) {
  FieldRng rng(11);
  for (int t = 0; t < 20; ++t) {
    Mat3 X = rng.mat();
    Cartan c = cartan_decompose(X);
    EXPECT_LT((c.devsym + c.skew + c.spherical - X).norm(), 1e-14);
    EXPECT_NEAR((c.devsym.array() * c.skew.array()).sum(), 0.0, 1e-14);
    EXPECT_NEAR((c.devsym.array() * c.spherical.array()).sum(), 0.0, 1e-14);
    EXPECT_NEAR(c.devsym.trace(), 0.0, 1e-14);
  }
}

TEST(TensorCore, AxlOfDisplayedMatrix) {
  EXPECT_LT(axl(Mat3::Zero()).norm(), 1e-15);
  EXPECT_LT((axl(m3({0, -3, 2, 3, 0, -1, -2, 1, 0})) - Vec3(1, 2, 3)).norm(), 1e-15);
}

TEST(TensorCore, AntiOfVector) {
  EXPECT_LT(anti(Vec3::Zero()).norm(), 1e-15);
  EXPECT_LT((anti(Vec3(1, 2, 3)) - m3({0, -3, 2, 3, 0, -1, -2, 1, 0})).norm(), 1e-15);
}

TEST(TensorCore, AntiIsCrossProductAndInvertsAxl) {
  FieldRng rng(5);
  for (int t = 0; t < 20; ++t) {
    Vec3 v = rng.vec(), w = rng.vec();
    EXPECT_LT((anti(v) * w - v.cross(w)).norm(), 1e-14);
    EXPECT_LT((axl(anti(v)) - v).norm(), 1e-14);
    Mat3 A = skw(rng.mat());
    EXPECT_LT((anti(axl(A)) - A).norm(), 1e-14);
  }
}

TEST(TensorCore, AxlRejectsSymmetricPart) { EXPECT_THROW(axl(Mat3::Identity()), NotAntisymmetric); }

TEST(TensorCore, LeviCivita) {
  EXPECT_EQ(levi_civita(0, 1, 2), 1);
  EXPECT_EQ(levi_civita(1, 2, 0), 1);
  EXPECT_EQ(levi_civita(2, 1, 0), -1);
  EXPECT_EQ(levi_civita(0, 0, 2), 0);
}

TEST(TensorCore, PermutationContractedWithAnti) {
  // brute force: (eps : anti v)_i = eps_ijk (-eps_kjm v_m)
  Vec3 v(1, 2, 3);
  Vec3 expect = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 3; ++m) expect(i) -= levi_civita(i, j, k) * levi_civita(k, j, m) * v(m);
  Vec3 got = contract(Ten3::permutation(), anti(v));
  EXPECT_LT((got - expect).norm(), 1e-15);
  EXPECT_LT((got - 2.0 * v).norm(), 1e-15);
}

TEST(TensorCore, ZeroThirdOrderTensor) {
  Ten3 E = Ten3::zero();
  EXPECT_EQ(contract(E, Mat3::Ones()).norm(), 0.0);
  EXPECT_EQ(apply(E, Vec3::Ones()).norm(), 0.0);
}

TEST(TensorCore, ApplyAndMatvec) {
  Ten3 E = Ten3::permutation();
  Vec3 v(1, -2, 0.5);
  EXPECT_LT((apply(E, v) - anti(v) * -1.0).norm(), 1e-15);  // eps_ijk v_k = -anti(v)_ij
  Mat3 X = m3({1, 2, 3, 4, 5, 6, 7, 8, 10});
  EXPECT_LT((matvec(X, v) - X * v).norm(), 1e-15);
}
