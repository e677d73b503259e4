#pragma once
// Lift of a fourth-order curvature tensor L acting on Curl(sym grad u) to a
// sixth-order tensor C acting on the full second gradient D2u.
//
// Index layouts (flat index 9a+3b+c):
//   strain gradient G_{abc} = eps_{ab,c}, eps = sym grad u
//   second gradient D_{kij} = u_{k,ij}

#include <json.hpp>

#include "cstress/poly.hpp"

namespace cstress {

struct CurvatureFourthOrder {
  Ten4 L;

  // X -> 2 a1 dev sym X + 2 a2 skw X
  static CurvatureFourthOrder isotropic(double alpha1, double alpha2);
  // Block-diagonal: row i of X is mapped by blocks[i] only.
  static CurvatureFourthOrder row_wise(const std::array<Mat3, 3>& blocks);

  Mat3 block(int i, int m) const { return L.block(i, m); }
  Mat3 apply(const Mat3& X) const { return L.apply(X); }
};

// D2u = A . G with the chosen reconstruction signs.
Ten6 build_A(ReconstructionSigns signs = ReconstructionSigns::Consistent);
// G = S . D2u: G_{abc} = (D_{abc} + D_{bac}) / 2, preceded by symmetrisation of D in its last two indices.
// S is the inverse of A between second gradients and strain gradients.
Ten6 build_S();

// B_{im} = 2 skew o anti o L^{im} o axl o skew acting on row m of G, L^{im} the (i,m) block of L.
// For row-wise L the off-diagonal blocks vanish identically.
Ten6 build_B(const CurvatureFourthOrder& L);

enum class LiftAdjoint {
  InverseOfA,  // C = S^T B S, reproduces the energy
  LiteralAT    // C = A B A^T with the Frobenius adjoint of A, off by a constant factor
};
Ten6 build_C(const CurvatureFourthOrder& L, LiftAdjoint mode = LiftAdjoint::InverseOfA,
             ReconstructionSigns signs = ReconstructionSigns::Consistent);

PolyMatField apply(const Ten4& L, const PolyMatField& X);
PolyTen3Field apply(const Ten6& C, const PolyTen3Field& E);

struct LiftReport {
  Poly3 lhs;  // <C.D2u, D2u>
  Poly3 rhs;  // <L.Curl(sym grad u), Curl(sym grad u)>
  double discrepancy = 0.0;
  bool pass = false;
};
LiftReport verify_energy_equality(const CurvatureFourthOrder& L, const PolyVecField& u,
                                  LiftAdjoint mode = LiftAdjoint::InverseOfA, double tol = 1e-12);
// <B.G, G> against <L k^, k^>
LiftReport verify_block_pairing(const CurvatureFourthOrder& L, const PolyVecField& u, double tol = 1e-12);

struct RoundTripReport {
  double max_error = 0.0;
  bool pass = false;
};
// Reconstructs D2u from grad sym grad u and compares with second_gradient(u).
RoundTripReport reconstruction_round_trip(const PolyVecField& u, ReconstructionSigns signs, double tol = 1e-12);

// Flat row-major 27x27 array: entry [27*r + c], r and c flat Ten3 indices.
nlohmann::json to_json(const Ten6& C);

}  // namespace cstress
