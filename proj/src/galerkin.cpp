#include "cstress/galerkin.hpp"

#include <cmath>
#include <stdexcept>

namespace cstress {

namespace {

const Real kPi = std::acos(Real(-1));

std::vector<Real> poly_mul(const std::vector<Real>& a, const std::vector<Real>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Real> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Real sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

// integral of x^m sin(kpi x) and x^m cos(kpi x)
std::pair<Real, Real> trig_moments(int k, int m) {
  const Real a = k * kPi, ca = sign_pow(k);
  Real I = (1 - ca) / a, J = 0;  // m = 0; sin(k pi) = 0
  for (int n = 1; n <= m; ++n) {
    Real In = -ca / a + (n / a) * J;
    Real Jn = -(n / a) * I;
    I = In;
    J = Jn;
  }
  return {I, J};
}

}  // namespace

Fn1D Fn1D::poly(std::vector<Real> coeffs) {
  Fn1D f;
  f.kind = Kind::Poly;
  f.c = std::move(coeffs);
  return f;
}

Fn1D Fn1D::sine(int k) {
  if (k < 1) throw std::invalid_argument("sine mode index must be >= 1");
  Fn1D f;
  f.kind = Kind::Sin;
  f.k = k;
  return f;
}

Fn1D Fn1D::derivative() const {
  Fn1D d = *this;
  switch (kind) {
    case Kind::Poly:
      d.c.clear();
      for (size_t i = 1; i < c.size(); ++i) d.c.push_back(i * c[i]);
      break;
    case Kind::Sin:
      d.kind = Kind::Cos;
      d.scale = scale * k * kPi;
      break;
    case Kind::Cos:
      d.kind = Kind::Sin;
      d.scale = -scale * k * kPi;
      break;
  }
  return d;
}

Real Fn1D::eval(Real x) const {
  switch (kind) {
    case Kind::Poly: {
      Real r = 0;
      for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
      return r;
    }
    case Kind::Sin: return scale * std::sin(k * kPi * x);
    case Kind::Cos: return scale * std::cos(k * kPi * x);
  }
  return 0;
}

Real Fn1D::moment(int m) const {
  if (kind == Kind::Poly) {
    Real r = 0;
    for (size_t i = 0; i < c.size(); ++i) r += c[i] / (m + i + 1);
    return r;
  }
  auto [I, J] = trig_moments(k, m);
  return scale * (kind == Kind::Sin ? I : J);
}

Real integrate_product(const Fn1D& f, const Fn1D& g) {
  using K = Fn1D::Kind;
  if (f.kind == K::Poly) {
    Real r = 0;
    for (size_t i = 0; i < f.c.size(); ++i)
      if (f.c[i] != 0) r += f.c[i] * g.moment(static_cast<int>(i));
    return r;
  }
  if (g.kind == K::Poly) return integrate_product(g, f);
  const Real s = f.scale * g.scale;
  if (f.kind == g.kind) return f.k == g.k ? s / 2 : 0;
  // sin(k) cos(l)
  const int k = f.kind == K::Sin ? f.k : g.k;
  const int l = f.kind == K::Sin ? g.k : f.k;
  if (k == l) return 0;
  return s * (1 - sign_pow(k + l)) / kPi * Real(k) / Real(k * k - l * l);
}

std::vector<Fn1D> bubble_family(int n) {
  std::vector<Fn1D> r;
  for (int i = 0; i < n; ++i) {
    std::vector<Real> c(i + 3, 0);
    c[i + 1] = 1;
    c[i + 2] = -1;
    r.push_back(Fn1D::poly(c));
  }
  return r;
}

std::vector<Fn1D> sine_family(int n) {
  std::vector<Fn1D> r;
  for (int k = 1; k <= n; ++k) r.push_back(Fn1D::sine(k));
  return r;
}

std::vector<Fn1D> legendre_family(int n) {
  std::vector<std::vector<Real>> P;
  const std::vector<Real> t{-1, 2};
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      P.push_back({1});
    } else if (i == 1) {
      P.push_back(t);
    } else {
      auto a = poly_mul(t, P[i - 1]);
      std::vector<Real> c(a.size(), 0);
      for (size_t j = 0; j < a.size(); ++j) c[j] += Real(2 * i - 1) / i * a[j];
      for (size_t j = 0; j < P[i - 2].size(); ++j) c[j] -= Real(i - 1) / i * P[i - 2][j];
      P.push_back(c);
    }
  }
  std::vector<Fn1D> r;
  for (auto& c : P) r.push_back(Fn1D::poly(c));
  return r;
}

const std::array<std::array<int, 3>, kJetOrders>& jet_multi_indices() {
  static const std::array<std::array<int, 3>, kJetOrders> m{{{0, 0, 0},
                                                              {1, 0, 0},
                                                              {0, 1, 0},
                                                              {0, 0, 1},
                                                              {2, 0, 0},
                                                              {1, 1, 0},
                                                              {1, 0, 1},
                                                              {0, 2, 0},
                                                              {0, 1, 1},
                                                              {0, 0, 2}}};
  return m;
}

int jet_index(int i) { return 1 + i; }

int jet_index(int i, int j) {
  if (i > j) std::swap(i, j);
  static const int t[3][3] = {{4, 5, 6}, {5, 7, 8}, {6, 8, 9}};
  return t[i][j];
}

Vec3 JetView::vec(int off) const { return Vec3(val(off), val(off + 1), val(off + 2)); }

Mat3 JetView::grad_vec(int off) const {
  Mat3 G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) G(i, j) = d(off + i, j);
  return G;
}

Ten3 JetView::hess_vec(int off) const {
  Ten3 D;
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) D(k, i, j) = dd(off + k, i, j);
  return D;
}

Mat3 JetView::mat(int off) const {
  Mat3 P;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) P(i, j) = val(off + 3 * i + j);
  return P;
}

Ten3 JetView::grad_mat(int off) const {
  Ten3 G;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) G(i, j, k) = d(off + 3 * i + j, k);
  return G;
}

Mat3 curl_from_grad(const Ten3& G) {
  Mat3 C = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (int e = levi_civita(j, a, b)) C(i, j) += e * G(i, b, a);
  return C;
}

Ten3 sym_grad_from_hess(const Ten3& D) {
  Ten3 S;
  for (int i = 0; i < 3; ++i)
    for (int b = 0; b < 3; ++b)
      for (int a = 0; a < 3; ++a) S(i, b, a) = 0.5 * (D(i, b, a) + D(b, i, a));
  return S;
}

Eigen::VectorXd flat_mat(const Mat3& M) {
  Eigen::VectorXd v(9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) v(3 * i + j) = M(i, j);
  return v;
}

QuadraticDensity& QuadraticDensity::add(double weight, Term f) {
  if (weight != 0.0) terms_.emplace_back(weight, std::move(f));
  return *this;
}

Eigen::MatrixXd QuadraticDensity::matrix() const {
  const int n = ncomp_ * kJetOrders;
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(n, n);
  for (const auto& [w, f] : terms_) {
    Eigen::MatrixXd M;
    for (int c = 0; c < n; ++c) {
      Eigen::VectorXd e = Eigen::VectorXd::Unit(n, c);
      Eigen::VectorXd col = f(JetView(e));
      if (c == 0) M.setZero(col.size(), n);
      M.col(c) = col;
    }
    W += w * M.transpose() * M;
  }
  return W;
}

int SeparableBasis::append_block(const std::vector<Fn1D>& family, const std::vector<Eigen::VectorXd>& directions) {
  const int first = size();
  const int f0 = static_cast<int>(fns.size());
  fns.insert(fns.end(), family.begin(), family.end());
  const int d0 = static_cast<int>(dirs.size());
  for (const auto& d : directions) {
    if (d.size() != ncomp) throw std::invalid_argument("basis direction has the wrong component count");
    dirs.push_back(d);
  }
  const int n = static_cast<int>(family.size());
  for (int d = 0; d < static_cast<int>(directions.size()); ++d)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) funcs.push_back({d0 + d, {f0 + i, f0 + j, f0 + k}});
  return first;
}

bool SeparableBasis::polynomial() const {
  for (const auto& f : fns)
    if (f.kind != Fn1D::Kind::Poly) return false;
  return true;
}

MatXR assemble_form(const SeparableBasis& basis, const QuadraticDensity& density) {
  if (density.ncomp() != basis.ncomp) throw std::invalid_argument("density and basis component counts differ");
  const int F = static_cast<int>(basis.fns.size());
  std::vector<std::array<Fn1D, 3>> der(F);
  for (int u = 0; u < F; ++u) {
    der[u][0] = basis.fns[u];
    der[u][1] = der[u][0].derivative();
    der[u][2] = der[u][1].derivative();
  }
  // T[u][v][p][q] = integral of psi_u^(p) psi_v^(q)
  std::vector<Real> T(static_cast<size_t>(F) * F * 9);
  for (int u = 0; u < F; ++u)
    for (int v = 0; v < F; ++v)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) T[(static_cast<size_t>(u) * F + v) * 9 + 3 * p + q] = integrate_product(der[u][p], der[v][q]);

  const Eigen::MatrixXd W = density.matrix();
  const int D = static_cast<int>(basis.dirs.size());
  struct Entry {
    int a, b;
    Real w;
  };
  std::vector<std::vector<Entry>> Wd(static_cast<size_t>(D) * D);
  for (int da = 0; da < D; ++da)
    for (int db = 0; db < D; ++db)
      for (int a = 0; a < kJetOrders; ++a)
        for (int b = 0; b < kJetOrders; ++b) {
          Real s = 0;
          for (int ca = 0; ca < basis.ncomp; ++ca) {
            if (basis.dirs[da](ca) == 0.0) continue;
            for (int cb = 0; cb < basis.ncomp; ++cb)
              s += Real(basis.dirs[da](ca)) * basis.dirs[db](cb) * W(ca * kJetOrders + a, cb * kJetOrders + b);
          }
          if (s != 0) Wd[static_cast<size_t>(da) * D + db].push_back({a, b, s});
        }

  const auto& mi = jet_multi_indices();
  const int n = basis.size();
  MatXR A = MatXR::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    const BasisFn& fa = basis.funcs[i];
    for (int j = i; j < n; ++j) {
      const BasisFn& fb = basis.funcs[j];
      Real s = 0;
      for (const Entry& e : Wd[static_cast<size_t>(fa.dir) * D + fb.dir]) {
        Real prod = e.w;
        for (int ax = 0; ax < 3 && prod != 0; ++ax)
          prod *= T[(static_cast<size_t>(fa.fn[ax]) * F + fb.fn[ax]) * 9 + 3 * mi[e.a][ax] + mi[e.b][ax]];
        s += prod;
      }
      A(i, j) = s;
      A(j, i) = s;
    }
  }
  return A;
}

VecXR assemble_load(const SeparableBasis& basis, const PolyVecField& f, int off) {
  VecXR b = VecXR::Zero(basis.size());
  for (int a = 0; a < basis.size(); ++a) {
    const BasisFn& fa = basis.funcs[a];
    Real s = 0;
    for (int c = 0; c < 3; ++c) {
      const double d = basis.dirs[fa.dir](off + c);
      if (d == 0.0) continue;
      for (const auto& [e, coef] : f[c].terms()) {
        Real prod = coef * d;
        for (int ax = 0; ax < 3; ++ax) prod *= basis.fns[fa.fn[ax]].moment(e[ax]);
        s += prod;
      }
    }
    b(a) = s;
  }
  return b;
}

Eigen::VectorXd evaluate(const SeparableBasis& basis, const VecXR& c, const Vec3& x) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(basis.ncomp);
  for (int a = 0; a < basis.size(); ++a) {
    if (c(a) == 0) continue;
    const BasisFn& fa = basis.funcs[a];
    Real s = c(a);
    for (int ax = 0; ax < 3; ++ax) s *= basis.fns[fa.fn[ax]].eval(x(ax));
    v += double(s) * basis.dirs[fa.dir];
  }
  return v;
}

std::vector<Poly3> to_polys(const SeparableBasis& basis, const VecXR& c, int cap) {
  if (!basis.polynomial()) throw std::invalid_argument("to_polys requires a polynomial basis");
  std::vector<Poly3> out(basis.ncomp, Poly3(0.0, cap));
  for (int a = 0; a < basis.size(); ++a) {
    if (c(a) == 0) continue;
    const BasisFn& fa = basis.funcs[a];
    Poly3 prod(double(c(a)), cap);
    for (int ax = 0; ax < 3; ++ax) {
      Poly3 p(0.0, cap);
      const auto& cf = basis.fns[fa.fn[ax]].c;
      for (size_t i = 0; i < cf.size(); ++i) {
        Exp e{0, 0, 0};
        e[ax] = static_cast<int>(i);
        if (cf[i] != 0) p.add_term(e, double(cf[i]));
      }
      prod = prod * p;
    }
    for (int comp = 0; comp < basis.ncomp; ++comp)
      if (basis.dirs[fa.dir](comp) != 0.0) out[comp] += basis.dirs[fa.dir](comp) * prod;
  }
  return out;
}

}  // namespace cstress
