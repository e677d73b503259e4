#include "cstress/tensor.hpp"

#include <cmath>

namespace cstress {

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  // even permutations of (0,1,2)
  if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
  return -1;
}

Ten3 Ten3::permutation() {
  Ten3 e;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) e(i, j, k) = levi_civita(i, j, k);
  return e;
}

Ten3& Ten3::operator+=(const Ten3& o) {
  for (int n = 0; n < 27; ++n) a[n] += o.a[n];
  return *this;
}

Ten3& Ten3::operator-=(const Ten3& o) {
  for (int n = 0; n < 27; ++n) a[n] -= o.a[n];
  return *this;
}

Ten3& Ten3::operator*=(double s) {
  for (auto& x : a) x *= s;
  return *this;
}

double Ten3::max_abs() const {
  double m = 0.0;
  for (double x : a) m = std::max(m, std::abs(x));
  return m;
}

Ten3 operator+(Ten3 a, const Ten3& b) { return a += b; }
Ten3 operator-(Ten3 a, const Ten3& b) { return a -= b; }
Ten3 operator*(double s, Ten3 a) { return a *= s; }

double inner(const Ten3& a, const Ten3& b) {
  double s = 0.0;
  for (int n = 0; n < 27; ++n) s += a.a[n] * b.a[n];
  return s;
}

Mat3 Ten4::apply(const Mat3& X) const {
  Eigen::Matrix<double, 9, 1> x;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) x(3 * i + j) = X(i, j);
  Eigen::Matrix<double, 9, 1> y = m * x;
  Mat3 Y;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Y(i, j) = y(3 * i + j);
  return Y;
}

Mat3 Ten4::block(int i, int k) const { return m.block<3, 3>(3 * i, 3 * k); }

bool Ten4::row_wise(double tol) const {
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      if (i != k && block(i, k).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

Eigen::Matrix<double, 27, 1> flatten(const Ten3& E) {
  Eigen::Matrix<double, 27, 1> v;
  for (int n = 0; n < 27; ++n) v(n) = E.a[n];
  return v;
}

Ten3 unflatten(const Eigen::Matrix<double, 27, 1>& v) {
  Ten3 E;
  for (int n = 0; n < 27; ++n) E.a[n] = v(n);
  return E;
}

Ten3 Ten6::apply(const Ten3& E) const { return unflatten(m * flatten(E)); }

Ten6 Ten6::transpose() const {
  Ten6 t;
  t.m = m.transpose();
  return t;
}

Ten6 operator*(const Ten6& a, const Ten6& b) {
  Ten6 c;
  c.m = a.m * b.m;
  return c;
}

Mat3 sym(const Mat3& X) { return 0.5 * (X + X.transpose()); }
Mat3 skw(const Mat3& X) { return 0.5 * (X - X.transpose()); }
Mat3 dev(const Mat3& X) { return X - (X.trace() / 3.0) * Mat3::Identity(); }
Mat3 dev_sym(const Mat3& X) { return dev(sym(X)); }
double frob2(const Mat3& X) { return X.squaredNorm(); }

Cartan cartan_decompose(const Mat3& X) {
  return {dev_sym(X), skw(X), (X.trace() / 3.0) * Mat3::Identity()};
}

Vec3 axl(const Mat3& A, double tol) {
  double s = sym(A).norm();
  if (s > tol) throw NotAntisymmetric("axl: input has symmetric part of norm " + std::to_string(s));
  // -1/2 eps_{ijk} A_ij, written out
  return Vec3(0.5 * (A(2, 1) - A(1, 2)), 0.5 * (A(0, 2) - A(2, 0)), 0.5 * (A(1, 0) - A(0, 1)));
}

Mat3 anti(const Vec3& v) {
  Mat3 A;
  A << 0.0, -v(2), v(1),
       v(2), 0.0, -v(0),
       -v(1), v(0), 0.0;
  return A;
}

Vec3 contract(const Ten3& E, const Mat3& X) {
  Vec3 r = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i) += E(i, j, k) * X(k, j);
  return r;
}

Mat3 apply(const Ten3& E, const Vec3& v) {
  Mat3 r = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j) += E(i, j, k) * v(k);
  return r;
}

Vec3 matvec(const Mat3& X, const Vec3& v) { return X * v; }

}  // namespace cstress
