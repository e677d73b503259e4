#pragma once
// Traction boundary conditions of both formulations on flat faces of the unit box.

#include <optional>
#include <string>

#include <json.hpp>

#include "cstress/stress.hpp"

namespace cstress {

struct SurfacePoint {
  Vec3 position = Vec3::Zero();
  Vec3 n = Vec3::UnitX();
  Vec3 tau1 = Vec3::UnitY();
  Vec3 tau2 = Vec3::UnitZ();
  Mat3 T = Mat3::Identity() - Vec3::UnitX() * Vec3::UnitX().transpose();  // Id - n(x)n
  Mat3 Q = Vec3::UnitX() * Vec3::UnitX().transpose();                     // n(x)n

  // Throws std::invalid_argument if |n| != 1 (tolerance 1e-12).
  static SurfacePoint make(const Vec3& position, const Vec3& n);
};

struct TractionSet {
  Vec3 traction = Vec3::Zero();
  Vec3 double_force = Vec3::Zero();
  Vec3 edge_force = Vec3::Zero();
};

enum class TractionVariant {
  Curl,            // Curl(sym grad u) formulation
  Axl,             // grad axl(skw grad u) formulation
  AxlFlippedAnti,  // axl formulation with anti(m~.n) negated
  MindlinTiersten  // incomplete set; double force pairs with (Id - n(x)n) axl skw grad du
};

std::string to_string(TractionVariant v);

class NonUnitNormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Row i of the result is m_i x n.
Mat3 build_M_hat(const Mat3& m_hat, const Vec3& n);
PolyMatField build_M_hat(const PolyMatField& m_hat, const Vec3& n);

// Traction and double force as polynomial fields for a constant normal n.
struct TractionFields {
  PolyVecField traction;
  PolyVecField double_force;
  PolyVecField surface_term;  // the tangential-derivative part of the traction, kept for inspection
};
TractionFields traction_fields(const StressState& s, const Vec3& n, TractionVariant v);

TractionSet traction_curl_form(const StressState& s, const SurfacePoint& sp);
TractionSet traction_axl_form(const StressState& s, const SurfacePoint& sp);
TractionSet traction_set(const StressState& s, const SurfacePoint& sp, TractionVariant v);

// One-sided edge integrand on a face with normal n and outward conormal nu:
// curl form (sym M^).nu, axl form 1/2 anti(m~.n).nu.
Vec3 edge_term(const StressState& s, const Vec3& x, const Vec3& n, const Vec3& nu, TractionVariant v);
// Jump across the box edge shared by faces with normals n1 and n2.
Vec3 edge_jump(const StressState& s, const Vec3& x, const Vec3& n1, const Vec3& n2, TractionVariant v);

struct DoubleForceComparison {
  Vec3 double_curl = Vec3::Zero();
  Vec3 double_axl = Vec3::Zero();
  Vec3 double_axl_flipped = Vec3::Zero();
  bool coincide = false;
  bool coincide_flipped = false;
  double m_hat_13 = 0.0;
  double m_hat_23 = 0.0;
  double m_tilde_31 = 0.0;
};
DoubleForceComparison double_force_compare(const PolyVecField& u, const MaterialParams& p, const SurfacePoint& sp,
                                   double tol = 1e-12);

// Face of [0,1]^3: normal = (side ? +1 : -1) e_axis.
struct BoxFace {
  int axis = 0;
  int side = 1;
  Vec3 normal() const;
  // Point on the face with in-face coordinates (s,t) in [0,1]^2 along the two remaining axes.
  Vec3 point(double s, double t) const;
};

struct FaceWork {
  double traction_part = 0.0;      // integral of <t, du>
  double double_force_part = 0.0;  // integral of <g, grad du . n>
  double total() const { return traction_part + double_force_part; }
};

class UnsupportedTestFunction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr int kFaceQuadratureOrder = 12;

// Tensor-product Gauss-Legendre quadrature over the face; order is 12 or 24.
// Throws UnsupportedTestFunction if du or its gradient is nonzero on the face boundary.
FaceWork boundary_virtual_work(const PolyVecField& u, const PolyVecField& du, const MaterialParams& p,
                               const BoxFace& face, TractionVariant v, int order = kFaceQuadratureOrder);
FaceWork boundary_virtual_work(const StressState& s, const PolyVecField& du, const BoxFace& face,
                               TractionVariant v, int order = kFaceQuadratureOrder);

// Integral over the face of div_S v = tr(grad v T) for a vector field v.
double surface_divergence_integral(const PolyVecField& v, const BoxFace& face, int order = kFaceQuadratureOrder);

// (s(1-s) t(1-t))^2 in the in-face coordinates of `face`.
Poly3 face_bump(const BoxFace& face);

nlohmann::json to_json(const TractionSet& t);

}  // namespace cstress
