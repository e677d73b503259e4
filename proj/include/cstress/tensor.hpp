#pragma once
// Small dense tensors over 3-space.
//
// Index convention: row-major throughout. A Mat3 X has rows X.row(i); the
// row-wise Curl/Div used by the field operators act on those rows.

#include <array>
#include <stdexcept>
#include <tuple>

#include <Eigen/Dense>

namespace cstress {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

// Third-order tensor E_{ijk}.
struct Ten3 {
  std::array<double, 27> a{};

  double& operator()(int i, int j, int k) { return a[9 * i + 3 * j + k]; }
  double operator()(int i, int j, int k) const { return a[9 * i + 3 * j + k]; }

  static Ten3 zero() { return Ten3{}; }
  static Ten3 permutation();

  Ten3& operator+=(const Ten3& o);
  Ten3& operator-=(const Ten3& o);
  Ten3& operator*=(double s);
  double max_abs() const;
};

Ten3 operator+(Ten3 a, const Ten3& b);
Ten3 operator-(Ten3 a, const Ten3& b);
Ten3 operator*(double s, Ten3 a);
double inner(const Ten3& a, const Ten3& b);

// Fourth-order tensor viewed as a linear map Mat3 -> Mat3.
// Stored as a 9x9 matrix acting on row-major flattened Mat3: L(3i+a, 3m+b) = L_{iamb}.
struct Ten4 {
  Eigen::Matrix<double, 9, 9> m = Eigen::Matrix<double, 9, 9>::Zero();

  double& operator()(int i, int a, int k, int b) { return m(3 * i + a, 3 * k + b); }
  double operator()(int i, int a, int k, int b) const { return m(3 * i + a, 3 * k + b); }

  Mat3 apply(const Mat3& X) const;
  // 3x3 block coupling row m of the input to row i of the output.
  Mat3 block(int i, int k) const;
  bool row_wise(double tol = 0.0) const;
};

// Sixth-order tensor viewed as a linear map Ten3 -> Ten3 (27x27, flat index 9i+3j+k).
struct Ten6 {
  Eigen::Matrix<double, 27, 27> m = Eigen::Matrix<double, 27, 27>::Zero();

  Ten3 apply(const Ten3& E) const;
  Ten6 transpose() const;
};

Ten6 operator*(const Ten6& a, const Ten6& b);

Eigen::Matrix<double, 27, 1> flatten(const Ten3& E);
Ten3 unflatten(const Eigen::Matrix<double, 27, 1>& v);

Mat3 sym(const Mat3& X);
Mat3 skw(const Mat3& X);
Mat3 dev(const Mat3& X);
Mat3 dev_sym(const Mat3& X);
double frob2(const Mat3& X);

struct Cartan {
  Mat3 devsym;
  Mat3 skew;
  Mat3 spherical;
};
Cartan cartan_decompose(const Mat3& X);

inline constexpr double kAntisymTol = 1e-12;

class NotAntisymmetric : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// (axl A)_k = -1/2 eps_{ijk} A_{ij}; throws NotAntisymmetric if |sym A| > tol.
Vec3 axl(const Mat3& A, double tol = kAntisymTol);
// (anti v)_{ij} = -eps_{ijk} v_k, so anti(v) w = v x w.
Mat3 anti(const Vec3& v);

int levi_civita(int i, int j, int k);

// (E:X)_i = E_{ijk} X_{kj}
Vec3 contract(const Ten3& E, const Mat3& X);
// (E.v)_{ij} = E_{ijk} v_k
Mat3 apply(const Ten3& E, const Vec3& v);
// (X.v)_i = X_{ij} v_j
Vec3 matvec(const Mat3& X, const Vec3& v);

}  // namespace cstress
