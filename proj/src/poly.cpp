#include "cstress/poly.hpp"

#include <algorithm>
#include <cmath>

namespace cstress {

namespace {

int total(const Exp& e) { return e[0] + e[1] + e[2]; }

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

}  // namespace

Poly3::Poly3(double c, int cap) : cap_(cap) {
  if (c != 0.0) terms_[{0, 0, 0}] = c;
}

Poly3 Poly3::monomial(const Exp& e, double c, int cap) {
  Poly3 p(0.0, cap);
  p.add_term(e, c);
  return p;
}

Poly3 Poly3::var(int axis, int cap) {
  Exp e{0, 0, 0};
  e[axis] = 1;
  return monomial(e, 1.0, cap);
}

Poly3 Poly3::with_cap(int cap) const {
  Poly3 p = *this;
  p.cap_ = cap;
  p.check_cap(degree());
  return p;
}

void Poly3::check_cap(int deg) const {
  if (deg > cap_)
    throw DegreeOverflow("polynomial degree " + std::to_string(deg) + " exceeds cap " + std::to_string(cap_));
}

int Poly3::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total(e));
  return d;
}

double Poly3::coeff(const Exp& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0.0 : it->second;
}

double Poly3::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

void Poly3::add_term(const Exp& e, double c) {
  if (c == 0.0) return;
  if (e[0] < 0 || e[1] < 0 || e[2] < 0) throw std::invalid_argument("negative exponent");
  check_cap(total(e));
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Poly3 Poly3::derivative(int axis) const {
  Poly3 d(0.0, cap_);
  for (const auto& [e, c] : terms_) {
    if (e[axis] == 0) continue;
    Exp f = e;
    f[axis] -= 1;
    d.add_term(f, c * e[axis]);
  }
  return d;
}

double Poly3::eval(const Vec3& x) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += c * ipow(x(0), e[0]) * ipow(x(1), e[1]) * ipow(x(2), e[2]);
  return s;
}

double Poly3::integrate(const Vec3& lo, const Vec3& hi) const {
  double s = 0.0;
  for (const auto& [e, c] : terms_) {
    double m = c;
    for (int a = 0; a < 3; ++a) m *= (ipow(hi(a), e[a] + 1) - ipow(lo(a), e[a] + 1)) / (e[a] + 1);
    s += m;
  }
  return s;
}

Poly3& Poly3::operator+=(const Poly3& o) {
  cap_ = std::max(cap_, o.cap_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
  cap_ = std::max(cap_, o.cap_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly3& Poly3::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly3 Poly3::operator-() const {
  Poly3 p = *this;
  return p *= -1.0;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 r(0.0, std::max(a.cap_, b.cap_));
  if (a.is_zero() || b.is_zero()) return r;
  r.check_cap(a.degree() + b.degree());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
Poly3 operator*(double s, Poly3 a) { return a *= s; }
Poly3 operator*(Poly3 a, double s) { return a *= s; }

// ---- vector fields ----

Vec3 PolyVecField::eval(const Vec3& x) const { return Vec3(c[0].eval(x), c[1].eval(x), c[2].eval(x)); }

double PolyVecField::max_abs_coeff() const {
  return std::max({c[0].max_abs_coeff(), c[1].max_abs_coeff(), c[2].max_abs_coeff()});
}

int PolyVecField::degree() const { return std::max({c[0].degree(), c[1].degree(), c[2].degree()}); }

PolyVecField PolyVecField::with_cap(int cap) const {
  PolyVecField r;
  for (int i = 0; i < 3; ++i) r[i] = c[i].with_cap(cap);
  return r;
}

PolyVecField& PolyVecField::operator+=(const PolyVecField& o) {
  for (int i = 0; i < 3; ++i) c[i] += o.c[i];
  return *this;
}

PolyVecField& PolyVecField::operator-=(const PolyVecField& o) {
  for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
  return *this;
}

PolyVecField& PolyVecField::operator*=(double s) {
  for (auto& p : c) p *= s;
  return *this;
}

PolyVecField operator+(PolyVecField a, const PolyVecField& b) { return a += b; }
PolyVecField operator-(PolyVecField a, const PolyVecField& b) { return a -= b; }
PolyVecField operator*(double s, PolyVecField a) { return a *= s; }

PolyVecField operator*(const Poly3& s, const PolyVecField& a) {
  PolyVecField r;
  for (int i = 0; i < 3; ++i) r[i] = s * a[i];
  return r;
}

// ---- matrix fields ----

PolyMatField PolyMatField::constant(const Mat3& M, int cap) {
  PolyMatField P;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) P(i, j) = Poly3(M(i, j), cap);
  return P;
}

PolyMatField PolyMatField::identity_times(const Poly3& s) {
  PolyMatField P;
  for (int i = 0; i < 3; ++i) P(i, i) = s;
  return P;
}

Mat3 PolyMatField::eval(const Vec3& x) const {
  Mat3 M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M(i, j) = e[i][j].eval(x);
  return M;
}

double PolyMatField::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& r : e)
    for (const auto& p : r) m = std::max(m, p.max_abs_coeff());
  return m;
}

int PolyMatField::degree() const {
  int d = -1;
  for (const auto& r : e)
    for (const auto& p : r) d = std::max(d, p.degree());
  return d;
}

PolyVecField PolyMatField::row(int i) const { return PolyVecField{{e[i][0], e[i][1], e[i][2]}}; }

PolyMatField PolyMatField::transpose() const {
  PolyMatField T;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) T(i, j) = e[j][i];
  return T;
}

Poly3 PolyMatField::trace() const { return e[0][0] + e[1][1] + e[2][2]; }

PolyMatField& PolyMatField::operator+=(const PolyMatField& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[i][j] += o.e[i][j];
  return *this;
}

PolyMatField& PolyMatField::operator-=(const PolyMatField& o) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) e[i][j] -= o.e[i][j];
  return *this;
}

PolyMatField& PolyMatField::operator*=(double s) {
  for (auto& r : e)
    for (auto& p : r) p *= s;
  return *this;
}

PolyMatField operator+(PolyMatField a, const PolyMatField& b) { return a += b; }
PolyMatField operator-(PolyMatField a, const PolyMatField& b) { return a -= b; }
PolyMatField operator*(double s, PolyMatField a) { return a *= s; }

PolyMatField operator*(const PolyMatField& a, const PolyMatField& b) {
  PolyMatField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j) += a(i, k) * b(k, j);
  return r;
}

PolyVecField operator*(const PolyMatField& a, const PolyVecField& v) {
  PolyVecField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += a(i, j) * v[j];
  return r;
}

PolyVecField operator*(const PolyMatField& a, const Vec3& v) {
  PolyVecField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i] += v(j) * a(i, j);
  return r;
}

PolyMatField operator*(const PolyMatField& a, const Mat3& M) {
  PolyMatField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r(i, j) += M(k, j) * a(i, k);
  return r;
}

PolyMatField sym(const PolyMatField& P) { return 0.5 * (P + P.transpose()); }
PolyMatField skw(const PolyMatField& P) { return 0.5 * (P - P.transpose()); }

PolyMatField dev(const PolyMatField& P) {
  return P - PolyMatField::identity_times((1.0 / 3.0) * P.trace());
}

PolyMatField dev_sym(const PolyMatField& P) { return dev(sym(P)); }

Poly3 inner(const PolyMatField& a, const PolyMatField& b) {
  Poly3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i, j) * b(i, j);
  return s;
}

Poly3 frob2(const PolyMatField& a) { return inner(a, a); }

Poly3 dot(const PolyVecField& a, const PolyVecField& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// ---- third-order fields ----

Ten3 PolyTen3Field::eval(const Vec3& x) const {
  Ten3 T;
  for (int n = 0; n < 27; ++n) T.a[n] = e[n].eval(x);
  return T;
}

double PolyTen3Field::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& p : e) m = std::max(m, p.max_abs_coeff());
  return m;
}

PolyTen3Field& PolyTen3Field::operator-=(const PolyTen3Field& o) {
  for (int n = 0; n < 27; ++n) e[n] -= o.e[n];
  return *this;
}

PolyTen3Field operator-(PolyTen3Field a, const PolyTen3Field& b) { return a -= b; }

Poly3 inner(const PolyTen3Field& a, const PolyTen3Field& b) {
  Poly3 s;
  for (int n = 0; n < 27; ++n) s += a.e[n] * b.e[n];
  return s;
}

// ---- differential operators ----

PolyVecField grad(const Poly3& f) { return PolyVecField{{f.derivative(0), f.derivative(1), f.derivative(2)}}; }

PolyMatField grad(const PolyVecField& u) {
  PolyMatField G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G(i, j) = u[i].derivative(j);
  return G;
}

PolyTen3Field grad(const PolyMatField& P) {
  PolyTen3Field G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) G(i, j, k) = P(i, j).derivative(k);
  return G;
}

Poly3 div(const PolyVecField& u) { return u[0].derivative(0) + u[1].derivative(1) + u[2].derivative(2); }

PolyVecField curl_vec(const PolyVecField& u) {
  return PolyVecField{{u[2].derivative(1) - u[1].derivative(2),
                       u[0].derivative(2) - u[2].derivative(0),
                       u[1].derivative(0) - u[0].derivative(1)}};
}

PolyMatField curl_mat(const PolyMatField& P) {
  PolyMatField C;
  for (int i = 0; i < 3; ++i) {
    PolyVecField r = curl_vec(P.row(i));
    for (int j = 0; j < 3; ++j) C(i, j) = r[j];
  }
  return C;
}

PolyVecField div_mat(const PolyMatField& P) {
  PolyVecField d;
  for (int i = 0; i < 3; ++i) d[i] = div(P.row(i));
  return d;
}

PolyTen3Field second_gradient(const PolyVecField& u) {
  PolyTen3Field D;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i) {
      Poly3 di = u[k].derivative(i);
      for (int j = 0; j < 3; ++j) D(k, i, j) = di.derivative(j);
    }
  return D;
}

PolyVecField axl_field(const PolyMatField& A, double tol) {
  double s = sym(A).max_abs_coeff();
  if (s > tol) throw NotAntisymmetric("axl_field: symmetric part coefficient " + std::to_string(s));
  return PolyVecField{{0.5 * (A(2, 1) - A(1, 2)), 0.5 * (A(0, 2) - A(2, 0)), 0.5 * (A(1, 0) - A(0, 1))}};
}

PolyMatField anti_field(const PolyVecField& v) {
  PolyMatField A;
  A(0, 1) = -v[2];
  A(0, 2) = v[1];
  A(1, 0) = v[2];
  A(1, 2) = -v[0];
  A(2, 0) = -v[1];
  A(2, 1) = v[0];
  return A;
}

namespace {

template <class T, class Get, class Diff>
void check_first_pair_symmetry(const Get& get, const Diff& diff, double tol) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (diff(get(i, j, k), get(j, i, k)) > tol)
          throw NotStrainGradient("strain gradient not symmetric in its first index pair");
}

}  // namespace

Ten3 reconstruct_second_gradient(const Ten3& G, ReconstructionSigns signs, double tol) {
  check_first_pair_symmetry<Ten3>([&](int i, int j, int k) { return G(i, j, k); },
                                  [](double a, double b) { return std::abs(a - b); }, tol);
  double s = signs == ReconstructionSigns::Consistent ? 1.0 : -1.0;
  Ten3 D;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) D(k, i, j) = G(i, k, j) + s * G(j, k, i) - G(i, j, k);
  return D;
}

PolyTen3Field reconstruct_second_gradient(const PolyTen3Field& G, ReconstructionSigns signs, double tol) {
  check_first_pair_symmetry<PolyTen3Field>([&](int i, int j, int k) -> const Poly3& { return G(i, j, k); },
                                           [](const Poly3& a, const Poly3& b) { return (a - b).max_abs_coeff(); },
                                           tol);
  double s = signs == ReconstructionSigns::Consistent ? 1.0 : -1.0;
  PolyTen3Field D;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) D(k, i, j) = G(i, k, j) + s * G(j, k, i) - G(i, j, k);
  return D;
}

}  // namespace cstress
