#pragma once
// Exact multivariate polynomials in (x1,x2,x3) and the field calculus built on them.

#include <array>
#include <map>
#include <stdexcept>
#include <string>

#include "cstress/tensor.hpp"

namespace cstress {

using Exp = std::array<int, 3>;

inline constexpr int kDefaultDegreeCap = 8;

class DegreeOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class Poly3 {
 public:
  Poly3() = default;
  explicit Poly3(double c, int cap = kDefaultDegreeCap);

  static Poly3 monomial(const Exp& e, double c = 1.0, int cap = kDefaultDegreeCap);
  static Poly3 var(int axis, int cap = kDefaultDegreeCap);

  const std::map<Exp, double>& terms() const { return terms_; }
  int cap() const { return cap_; }
  // Returns a copy with a different cap (checked).
  Poly3 with_cap(int cap) const;

  int degree() const;  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  double coeff(const Exp& e) const;
  double max_abs_coeff() const;

  Poly3 derivative(int axis) const;
  double eval(const Vec3& x) const;
  // Exact integral over the box [lo,hi] from closed-form monomial moments.
  double integrate(const Vec3& lo = Vec3::Zero(), const Vec3& hi = Vec3::Ones()) const;

  void add_term(const Exp& e, double c);

  Poly3& operator+=(const Poly3& o);
  Poly3& operator-=(const Poly3& o);
  Poly3& operator*=(double s);
  Poly3 operator-() const;

  friend Poly3 operator*(const Poly3& a, const Poly3& b);

 private:
  void check_cap(int deg) const;
  std::map<Exp, double> terms_;
  int cap_ = kDefaultDegreeCap;
};

Poly3 operator+(Poly3 a, const Poly3& b);
Poly3 operator-(Poly3 a, const Poly3& b);
Poly3 operator*(double s, Poly3 a);
Poly3 operator*(Poly3 a, double s);

struct PolyVecField {
  std::array<Poly3, 3> c;

  Poly3& operator[](int i) { return c[i]; }
  const Poly3& operator[](int i) const { return c[i]; }

  Vec3 eval(const Vec3& x) const;
  double max_abs_coeff() const;
  int degree() const;
  PolyVecField with_cap(int cap) const;

  PolyVecField& operator+=(const PolyVecField& o);
  PolyVecField& operator-=(const PolyVecField& o);
  PolyVecField& operator*=(double s);
};

PolyVecField operator+(PolyVecField a, const PolyVecField& b);
PolyVecField operator-(PolyVecField a, const PolyVecField& b);
PolyVecField operator*(double s, PolyVecField a);
PolyVecField operator*(const Poly3& s, const PolyVecField& a);

struct PolyMatField {
  std::array<std::array<Poly3, 3>, 3> e;

  Poly3& operator()(int i, int j) { return e[i][j]; }
  const Poly3& operator()(int i, int j) const { return e[i][j]; }

  static PolyMatField constant(const Mat3& M, int cap = kDefaultDegreeCap);
  static PolyMatField identity_times(const Poly3& s);

  Mat3 eval(const Vec3& x) const;
  double max_abs_coeff() const;
  int degree() const;
  PolyVecField row(int i) const;

  PolyMatField transpose() const;
  Poly3 trace() const;

  PolyMatField& operator+=(const PolyMatField& o);
  PolyMatField& operator-=(const PolyMatField& o);
  PolyMatField& operator*=(double s);
};

PolyMatField operator+(PolyMatField a, const PolyMatField& b);
PolyMatField operator-(PolyMatField a, const PolyMatField& b);
PolyMatField operator*(double s, PolyMatField a);
PolyMatField operator*(const PolyMatField& a, const PolyMatField& b);
PolyVecField operator*(const PolyMatField& a, const PolyVecField& v);
// Matrix field times a constant vector / matrix.
PolyVecField operator*(const PolyMatField& a, const Vec3& v);
PolyMatField operator*(const PolyMatField& a, const Mat3& M);

PolyMatField sym(const PolyMatField& P);
PolyMatField skw(const PolyMatField& P);
PolyMatField dev(const PolyMatField& P);
PolyMatField dev_sym(const PolyMatField& P);
Poly3 inner(const PolyMatField& a, const PolyMatField& b);
Poly3 frob2(const PolyMatField& a);
Poly3 dot(const PolyVecField& a, const PolyVecField& b);

// Third-order tensor field, entry (i,j,k) at index 9i+3j+k.
struct PolyTen3Field {
  std::array<Poly3, 27> e;

  Poly3& operator()(int i, int j, int k) { return e[9 * i + 3 * j + k]; }
  const Poly3& operator()(int i, int j, int k) const { return e[9 * i + 3 * j + k]; }

  Ten3 eval(const Vec3& x) const;
  double max_abs_coeff() const;
  PolyTen3Field& operator-=(const PolyTen3Field& o);
};

PolyTen3Field operator-(PolyTen3Field a, const PolyTen3Field& b);
Poly3 inner(const PolyTen3Field& a, const PolyTen3Field& b);

// ---- differential operators ----
PolyVecField grad(const Poly3& f);
// (grad u)_{ij} = u_{i,j}; row i is the gradient of component i
PolyMatField grad(const PolyVecField& u);
// (grad P)_{ijk} = P_{ij,k}
PolyTen3Field grad(const PolyMatField& P);
Poly3 div(const PolyVecField& u);
PolyVecField curl_vec(const PolyVecField& u);
// Row-wise: (Curl P)_i = curl(P_i), (Div P)_i = div(P_i)
PolyMatField curl_mat(const PolyMatField& P);
PolyVecField div_mat(const PolyMatField& P);
// (D2u)_{kij} = u_{k,ij}
PolyTen3Field second_gradient(const PolyVecField& u);

// Pointwise axl/anti lifted to polynomial fields; axl_field rejects a field whose
// symmetric part has a coefficient above tol.
PolyVecField axl_field(const PolyMatField& A, double tol = kAntisymTol);
PolyMatField anti_field(const PolyVecField& v);

// Second-gradient reconstruction from a strain gradient G_{ijk} = eps_{ij,k}.
enum class ReconstructionSigns {
  Consistent,     // u_{k,ij} = eps_{ik,j} + eps_{jk,i} - eps_{ij,k}
  FlippedMiddle   // u_{k,ij} = eps_{ik,j} - eps_{jk,i} - eps_{ij,k}
};

class NotStrainGradient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Ten3 reconstruct_second_gradient(const Ten3& eps_grad, ReconstructionSigns signs = ReconstructionSigns::Consistent,
                                 double tol = 1e-12);
PolyTen3Field reconstruct_second_gradient(const PolyTen3Field& eps_grad,
                                          ReconstructionSigns signs = ReconstructionSigns::Consistent,
                                          double tol = 1e-12);

}  // namespace cstress
