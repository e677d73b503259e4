#include "cstress/lift.hpp"

namespace cstress {

namespace {

Mat3 slice(const Ten3& E, int m) {
  Mat3 X;
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k) X(j, k) = E(m, j, k);
  return X;
}

// Column-by-column assembly of a linear map on Ten3.
template <class F>
Ten6 from_linear_map(F&& f) {
  Ten6 T;
  for (int c = 0; c < 27; ++c) {
    Ten3 e;
    e.a[c] = 1.0;
    T.m.col(c) = flatten(f(e));
  }
  return T;
}

}  // namespace

CurvatureFourthOrder CurvatureFourthOrder::isotropic(double alpha1, double alpha2) {
  CurvatureFourthOrder c;
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a)
      for (int m = 0; m < 3; ++m)
        for (int b = 0; b < 3; ++b) {
          double d_im = i == m, d_ab = a == b, d_ib = i == b, d_am = a == m, d_ia = i == a, d_mb = m == b;
          double symp = 0.5 * (d_im * d_ab + d_ib * d_am);
          double skwp = 0.5 * (d_im * d_ab - d_ib * d_am);
          c.L(i, a, m, b) = 2.0 * alpha1 * (symp - d_ia * d_mb / 3.0) + 2.0 * alpha2 * skwp;
        }
  return c;
}

CurvatureFourthOrder CurvatureFourthOrder::row_wise(const std::array<Mat3, 3>& blocks) {
  CurvatureFourthOrder c;
  for (int i = 0; i < 3; ++i) c.L.m.block<3, 3>(3 * i, 3 * i) = blocks[i];
  return c;
}

Ten6 build_A(ReconstructionSigns signs) {
  const double s = signs == ReconstructionSigns::Consistent ? 1.0 : -1.0;
  return from_linear_map([&](const Ten3& G) {
    Ten3 D;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) D(k, i, j) = G(i, k, j) + s * G(j, k, i) - G(i, j, k);
    return D;
  });
}

Ten6 build_S() {
  return from_linear_map([](const Ten3& D) {
    Ten3 Ds;
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) Ds(k, i, j) = 0.5 * (D(k, i, j) + D(k, j, i));
    Ten3 G;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c) G(a, b, c) = 0.5 * (Ds(a, b, c) + Ds(b, a, c));
    return G;
  });
}

Ten6 build_B(const CurvatureFourthOrder& L) {
  return from_linear_map([&](const Ten3& G) {
    Ten3 out;
    for (int m = 0; m < 3; ++m) {
      Vec3 a = axl(skw(slice(G, m)));
      for (int i = 0; i < 3; ++i) {
        Mat3 Lim = L.block(i, m);
        if (Lim.isZero(0.0)) continue;
        Mat3 Y = 2.0 * skw(anti(Lim * a));
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) out(i, j, k) += Y(j, k);
      }
    }
    return out;
  });
}

Ten6 build_C(const CurvatureFourthOrder& L, LiftAdjoint mode, ReconstructionSigns signs) {
  Ten6 B = build_B(L);
  if (mode == LiftAdjoint::LiteralAT) {
    Ten6 A = build_A(signs);
    return A * B * A.transpose();
  }
  Ten6 S = build_S();
  return S.transpose() * B * S;
}

PolyMatField apply(const Ten4& L, const PolyMatField& X) {
  PolyMatField Y;
  for (int i = 0; i < 3; ++i)
    for (int a = 0; a < 3; ++a)
      for (int m = 0; m < 3; ++m)
        for (int b = 0; b < 3; ++b) {
          double c = L(i, a, m, b);
          if (c != 0.0) Y(i, a) += c * X(m, b);
        }
  return Y;
}

PolyTen3Field apply(const Ten6& C, const PolyTen3Field& E) {
  PolyTen3Field R;
  for (int r = 0; r < 27; ++r)
    for (int c = 0; c < 27; ++c) {
      double v = C.m(r, c);
      if (v != 0.0) R.e[r] += v * E.e[c];
    }
  return R;
}

namespace {

LiftReport finish(Poly3 lhs, Poly3 rhs, double tol) {
  LiftReport r;
  r.discrepancy = (lhs - rhs).max_abs_coeff();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.pass = r.discrepancy <= tol;
  return r;
}

Poly3 curvature_pairing(const CurvatureFourthOrder& L, const PolyVecField& u) {
  PolyMatField kh = curl_mat(sym(grad(u)));
  return inner(apply(L.L, kh), kh);
}

}  // namespace

LiftReport verify_energy_equality(const CurvatureFourthOrder& L, const PolyVecField& u, LiftAdjoint mode,
                                  double tol) {
  PolyTen3Field D = second_gradient(u);
  Ten6 C = build_C(L, mode);
  return finish(inner(apply(C, D), D), curvature_pairing(L, u), tol);
}

LiftReport verify_block_pairing(const CurvatureFourthOrder& L, const PolyVecField& u, double tol) {
  PolyTen3Field G = grad(sym(grad(u)));
  return finish(inner(apply(build_B(L), G), G), curvature_pairing(L, u), tol);
}

RoundTripReport reconstruction_round_trip(const PolyVecField& u, ReconstructionSigns signs, double tol) {
  PolyTen3Field G = grad(sym(grad(u)));
  RoundTripReport r;
  r.max_error = (reconstruct_second_gradient(G, signs) - second_gradient(u)).max_abs_coeff();
  r.pass = r.max_error <= tol;
  return r;
}

nlohmann::json to_json(const Ten6& C) {
  nlohmann::json a = nlohmann::json::array();
  for (int r = 0; r < 27; ++r)
    for (int c = 0; c < 27; ++c) a.push_back(C.m(r, c));
  return {{"index_schema", "entry[27*r + c]; r = 9k+3i+j addresses (C.D)_{kij}, c addresses D_{kij}"},
          {"values", a}};
}

}  // namespace cstress
