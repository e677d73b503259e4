#include "cstress/tractions.hpp"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

namespace cstress {

SurfacePoint SurfacePoint::make(const Vec3& position, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) throw NonUnitNormal("surface normal must have unit length");
  SurfacePoint sp;
  sp.position = position;
  sp.n = n;
  // any vector not parallel to n seeds the tangent frame
  Vec3 seed = std::abs(n(0)) < 0.9 ? Vec3::UnitX() : Vec3::UnitY();
  sp.tau1 = (seed - seed.dot(n) * n).normalized();
  sp.tau2 = n.cross(sp.tau1);
  sp.Q = n * n.transpose();
  sp.T = Mat3::Identity() - sp.Q;
  return sp;
}

std::string to_string(TractionVariant v) {
  switch (v) {
    case TractionVariant::Curl: return "curl";
    case TractionVariant::Axl: return "axl";
    case TractionVariant::AxlFlippedAnti: return "axl_flipped_anti";
    case TractionVariant::MindlinTiersten: return "mindlin_tiersten_incomplete";
  }
  return "?";
}

Mat3 build_M_hat(const Mat3& m_hat, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) throw NonUnitNormal("build_M_hat: normal must have unit length");
  Mat3 M;
  for (int i = 0; i < 3; ++i) M.row(i) = m_hat.row(i).transpose().cross(n).transpose();
  return M;
}

PolyMatField build_M_hat(const PolyMatField& m_hat, const Vec3& n) {
  if (std::abs(n.norm() - 1.0) > 1e-12) throw NonUnitNormal("build_M_hat: normal must have unit length");
  PolyMatField M;
  for (int i = 0; i < 3; ++i) {
    const Poly3 &a = m_hat(i, 0), &b = m_hat(i, 1), &c = m_hat(i, 2);
    M(i, 0) = n(2) * b - n(1) * c;
    M(i, 1) = n(0) * c - n(2) * a;
    M(i, 2) = n(1) * a - n(0) * b;
  }
  return M;
}

namespace {

// {grad F}_{ij,k} T_{jk}
PolyVecField tangential_divergence(const PolyMatField& F, const Mat3& T) {
  PolyVecField r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        if (T(j, k) != 0.0) r[i] += T(j, k) * F(i, j).derivative(k);
  return r;
}

PolyVecField cross(const Vec3& a, const PolyVecField& b) {
  return PolyVecField{{a(1) * b[2] - a(2) * b[1], a(2) * b[0] - a(0) * b[2], a(0) * b[1] - a(1) * b[0]}};
}

}  // namespace

TractionFields traction_fields(const StressState& s, const Vec3& n, TractionVariant v) {
  if (std::abs(n.norm() - 1.0) > 1e-12) throw NonUnitNormal("traction: normal must have unit length");
  const Mat3 T = Mat3::Identity() - n * n.transpose();
  TractionFields out;
  switch (v) {
    case TractionVariant::Curl: {
      PolyMatField sM = sym(build_M_hat(s.m_hat, n));
      out.surface_term = tangential_divergence(sM * T, T);
      out.traction = (s.sigma + s.tau_hat) * n - out.surface_term;
      out.double_force = PolyMatField::constant(T) * (sM * n);
      break;
    }
    case TractionVariant::Axl:
    case TractionVariant::AxlFlippedAnti: {
      double sign = v == TractionVariant::Axl ? 1.0 : -1.0;
      PolyMatField A = sign * anti_field(s.m_tilde * n);
      out.surface_term = 0.5 * tangential_divergence(A * T, T);
      out.traction = (s.sigma - s.tau_tilde) * n - out.surface_term;
      out.double_force = 0.5 * (PolyMatField::constant(T) * (A * n));
      break;
    }
    case TractionVariant::MindlinTiersten: {
      Poly3 mnn = dot(PolyVecField{{Poly3(n(0)), Poly3(n(1)), Poly3(n(2))}}, sym(s.m_tilde) * n);
      out.surface_term = 0.5 * cross(n, grad(mnn));
      out.traction = (s.sigma - s.tau_tilde) * n - out.surface_term;
      out.double_force = PolyMatField::constant(T) * (s.m_tilde * n);
      break;
    }
  }
  return out;
}

TractionSet traction_set(const StressState& s, const SurfacePoint& sp, TractionVariant v) {
  TractionFields f = traction_fields(s, sp.n, v);
  TractionSet t;
  t.traction = f.traction.eval(sp.position);
  t.double_force = f.double_force.eval(sp.position);
  return t;
}

TractionSet traction_curl_form(const StressState& s, const SurfacePoint& sp) {
  return traction_set(s, sp, TractionVariant::Curl);
}

TractionSet traction_axl_form(const StressState& s, const SurfacePoint& sp) {
  return traction_set(s, sp, TractionVariant::Axl);
}

Vec3 edge_term(const StressState& s, const Vec3& x, const Vec3& n, const Vec3& nu, TractionVariant v) {
  switch (v) {
    case TractionVariant::Curl:
      return sym(build_M_hat(s.m_hat.eval(x), n)) * nu;
    case TractionVariant::Axl:
      return 0.5 * anti(s.m_tilde.eval(x) * n) * nu;
    case TractionVariant::AxlFlippedAnti:
      return -0.5 * anti(s.m_tilde.eval(x) * n) * nu;
    case TractionVariant::MindlinTiersten:
      break;
  }
  throw std::invalid_argument("edge term not defined for the incomplete variant");
}

Vec3 edge_jump(const StressState& s, const Vec3& x, const Vec3& n1, const Vec3& n2, TractionVariant v) {
  // on face 1 the outward conormal of the shared edge is n2, and vice versa
  return edge_term(s, x, n1, n2, v) + edge_term(s, x, n2, n1, v);
}

DoubleForceComparison double_force_compare(const PolyVecField& u, const MaterialParams& p, const SurfacePoint& sp,
                                   double tol) {
  StressState s = assemble(u, p);
  DoubleForceComparison r;
  r.double_curl = traction_set(s, sp, TractionVariant::Curl).double_force;
  r.double_axl = traction_set(s, sp, TractionVariant::Axl).double_force;
  r.double_axl_flipped = traction_set(s, sp, TractionVariant::AxlFlippedAnti).double_force;
  r.coincide = (r.double_curl - r.double_axl).cwiseAbs().maxCoeff() <= tol;
  r.coincide_flipped = (r.double_curl - r.double_axl_flipped).cwiseAbs().maxCoeff() <= tol;
  Mat3 mh = s.m_hat.eval(sp.position), mt = s.m_tilde.eval(sp.position);
  r.m_hat_13 = mh(0, 2);
  r.m_hat_23 = mh(1, 2);
  r.m_tilde_31 = mt(2, 0);
  return r;
}

Vec3 BoxFace::normal() const {
  Vec3 n = Vec3::Zero();
  n(axis) = side ? 1.0 : -1.0;
  return n;
}

Vec3 BoxFace::point(double s, double t) const {
  Vec3 x;
  x(axis) = side ? 1.0 : 0.0;
  x((axis + 1) % 3) = s;
  x((axis + 2) % 3) = t;
  return x;
}

Poly3 face_bump(const BoxFace& face) {
  Poly3 s = Poly3::var((face.axis + 1) % 3), t = Poly3::var((face.axis + 2) % 3);
  Poly3 b = s * (Poly3(1.0) - s) * t * (Poly3(1.0) - t);
  return b * b;
}

namespace {

struct Rule {
  std::vector<double> x, w;  // on [0,1]
};

template <unsigned N>
Rule gauss_rule() {
  using G = boost::math::quadrature::gauss<double, N>;
  Rule r;
  const auto& a = G::abscissa();
  const auto& w = G::weights();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) {
      r.x.push_back(0.5);
      r.w.push_back(0.5 * w[i]);
      continue;
    }
    r.x.push_back(0.5 * (1.0 - a[i]));
    r.w.push_back(0.5 * w[i]);
    r.x.push_back(0.5 * (1.0 + a[i]));
    r.w.push_back(0.5 * w[i]);
  }
  return r;
}

const Rule& rule(int order) {
  static const Rule r12 = gauss_rule<12>();
  static const Rule r24 = gauss_rule<24>();
  if (order == 12) return r12;
  if (order == 24) return r24;
  throw std::invalid_argument("face quadrature order must be 12 or 24");
}

template <class F>
double integrate_face(const BoxFace& face, int order, F&& f) {
  const Rule& r = rule(order);
  double sum = 0.0;
  for (size_t i = 0; i < r.x.size(); ++i)
    for (size_t j = 0; j < r.x.size(); ++j) sum += r.w[i] * r.w[j] * f(face.point(r.x[i], r.x[j]));
  return sum;
}

void check_support(const PolyVecField& du, const BoxFace& face) {
  PolyMatField g = grad(du);
  const double scale = std::max(1.0, du.max_abs_coeff());
  const int m = 16;
  for (int e = 0; e < 4; ++e)
    for (int q = 0; q <= m; ++q) {
      double a = double(q) / m;
      double s = e < 2 ? a : double(e - 2), t = e < 2 ? double(e) : a;
      Vec3 x = face.point(s, t);
      double v = std::max(du.eval(x).cwiseAbs().maxCoeff(), g.eval(x).cwiseAbs().maxCoeff());
      if (v > 1e-12 * scale)
        throw UnsupportedTestFunction("test function or its gradient is nonzero on the face boundary");
    }
}

}  // namespace

FaceWork boundary_virtual_work(const StressState& s, const PolyVecField& du, const BoxFace& face,
                               TractionVariant v, int order) {
  check_support(du, face);
  const Vec3 n = face.normal();
  TractionFields f = traction_fields(s, n, v);
  PolyMatField G = grad(du);
  PolyVecField conj;
  if (v == TractionVariant::MindlinTiersten) {
    const Mat3 T = Mat3::Identity() - n * n.transpose();
    conj = PolyMatField::constant(T) * axl_field(skw(G));
  } else {
    conj = G * n;
  }
  FaceWork w;
  w.traction_part = integrate_face(face, order, [&](const Vec3& x) { return f.traction.eval(x).dot(du.eval(x)); });
  w.double_force_part =
      integrate_face(face, order, [&](const Vec3& x) { return f.double_force.eval(x).dot(conj.eval(x)); });
  return w;
}

FaceWork boundary_virtual_work(const PolyVecField& u, const PolyVecField& du, const MaterialParams& p,
                               const BoxFace& face, TractionVariant v, int order) {
  return boundary_virtual_work(assemble(u, p), du, face, v, order);
}

double surface_divergence_integral(const PolyVecField& v, const BoxFace& face, int order) {
  const Vec3 n = face.normal();
  const Mat3 T = Mat3::Identity() - n * n.transpose();
  PolyMatField G = grad(v);
  return integrate_face(face, order, [&](const Vec3& x) { return (G.eval(x) * T).trace(); });
}

nlohmann::json to_json(const TractionSet& t) {
  auto v = [](const Vec3& a) { return nlohmann::json::array({a(0), a(1), a(2)}); };
  return {{"traction", v(t.traction)}, {"double_force", v(t.double_force)}, {"edge_force", v(t.edge_force)}};
}

}  // namespace cstress
