#pragma once
// Tensor-product Galerkin machinery shared by the displacement solver and the
// micromorphic solves. Basis functions are d * psi_a(x1) psi_b(x2) psi_c(x3) with a
// constant direction d in component space; energies are quadratic forms in the
// 2-jet of the unknown fields, integrated exactly axis by axis.

#include <array>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "cstress/poly.hpp"

namespace cstress {

using Real = long double;
using MatXR = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
using VecXR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

// One-variable function on [0,1]: polynomial, or scale * sin(k pi x) / scale * cos(k pi x).
struct Fn1D {
  enum class Kind { Poly, Sin, Cos };
  Kind kind = Kind::Poly;
  std::vector<Real> c;  // ascending powers
  int k = 0;
  Real scale = 1;

  static Fn1D poly(std::vector<Real> coeffs);
  static Fn1D sine(int k);

  Fn1D derivative() const;
  Real eval(Real x) const;
  Real moment(int m) const;  // integral of x^m f over [0,1]
};

// Integral over [0,1] of f g, closed form for every kind pairing.
Real integrate_product(const Fn1D& f, const Fn1D& g);

// x(1-x) x^i, i = 0..n-1
std::vector<Fn1D> bubble_family(int n);
// sin(k pi x), k = 1..n
std::vector<Fn1D> sine_family(int n);
// Shifted Legendre P_i(2x-1), i = 0..n-1; no boundary condition.
std::vector<Fn1D> legendre_family(int n);

// ---- jets ----
// Multi-indices of order <= 2: 0, e1, e2, e3, 2e1, e1+e2, e1+e3, 2e2, e2+e3, 2e3.
inline constexpr int kJetOrders = 10;
const std::array<std::array<int, 3>, kJetOrders>& jet_multi_indices();
int jet_index(int i);         // first derivative along i
int jet_index(int i, int j);  // second derivative along i,j

// Read access to the 2-jet of a field with ncomp scalar components.
// Entry comp*10 + alpha holds d^alpha of component comp.
class JetView {
 public:
  explicit JetView(const Eigen::VectorXd& v) : v_(v) {}
  double val(int c) const { return v_(c * kJetOrders); }
  double d(int c, int j) const { return v_(c * kJetOrders + jet_index(j)); }
  double dd(int c, int i, int j) const { return v_(c * kJetOrders + jet_index(i, j)); }

  // Vector field stored in components off..off+2.
  Vec3 vec(int off) const;
  Mat3 grad_vec(int off) const;
  Ten3 hess_vec(int off) const;  // (k,i,j) -> u_{k,ij}
  // Matrix field with entry (i,j) in component off + 3i + j.
  Mat3 mat(int off) const;
  Ten3 grad_mat(int off) const;  // (i,j,k) -> P_{ij,k}

 private:
  const Eigen::VectorXd& v_;
};

// Row-wise Curl of a matrix field from its gradient G(i,b,a) = P_{ib,a}.
Mat3 curl_from_grad(const Ten3& G);
// grad of sym grad u from the second gradient
Ten3 sym_grad_from_hess(const Ten3& D);

// Density sum_t w_t |F_t(jet)|^2 with each F_t linear.
class QuadraticDensity {
 public:
  using Term = std::function<Eigen::VectorXd(const JetView&)>;
  explicit QuadraticDensity(int ncomp) : ncomp_(ncomp) {}

  QuadraticDensity& add(double weight, Term f);
  int ncomp() const { return ncomp_; }
  // Symmetric matrix W with density = j^T W j.
  Eigen::MatrixXd matrix() const;

 private:
  int ncomp_;
  std::vector<std::pair<double, Term>> terms_;
};

Eigen::VectorXd flat_mat(const Mat3& M);

struct BasisFn {
  int dir = 0;
  std::array<int, 3> fn{};  // indices into SeparableBasis::fns
};

struct SeparableBasis {
  int ncomp = 3;
  std::vector<Fn1D> fns;
  std::vector<Eigen::VectorXd> dirs;
  std::vector<BasisFn> funcs;

  int size() const { return static_cast<int>(funcs.size()); }
  // Adds fns and appends every (dir, i, j, k) combination over them; returns the first new index.
  int append_block(const std::vector<Fn1D>& family, const std::vector<Eigen::VectorXd>& directions);
  bool polynomial() const;
};

// A_ab = integral of jet(phi_a)^T W jet(phi_b)
MatXR assemble_form(const SeparableBasis& basis, const QuadraticDensity& density);
// b_a = integral of <f, phi_a> restricted to components off..off+2
VecXR assemble_load(const SeparableBasis& basis, const PolyVecField& f, int off = 0);

// Field values (all components) of sum_a c_a phi_a at x.
Eigen::VectorXd evaluate(const SeparableBasis& basis, const VecXR& c, const Vec3& x);
// Polynomial fields; requires a polynomial basis. Returns one Poly3 per component.
std::vector<Poly3> to_polys(const SeparableBasis& basis, const VecXR& c, int cap);

}  // namespace cstress
