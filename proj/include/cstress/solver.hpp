#pragma once
// Galerkin minimisation of the couple-stress energy on [0,1]^3 with u = 0 on the boundary.

#include <string>

#include <json.hpp>

#include "cstress/galerkin.hpp"
#include "cstress/params.hpp"

namespace cstress {

enum class BasisFamily { Bubble, Sine };
std::string to_string(BasisFamily f);
BasisFamily basis_family_from_name(const std::string& s);

struct BasisSpec {
  BasisFamily family = BasisFamily::Bubble;
  int N = 2;  // modes per axis
  int dimension() const { return 3 * N * N * N; }
};

inline constexpr int kMaxModes = 4;
// Polynomial fields rebuilt from a bubble solution carry this cap.
inline constexpr int kSolverDegreeCap = 16;

// Every field vanishes on the boundary of the box.
SeparableBasis make_displacement_basis(const BasisSpec& spec);

enum class CurvatureForm { Curl, Axl };

// mu |sym grad u|^2 + lambda/2 tr^2, u in components off..off+2 of an ncomp field
QuadraticDensity elastic_density(const MaterialParams& p, int ncomp = 3, int off = 0);
// mu Lc^2 (a1 |dev sym k|^2 + a2 |skw k|^2), k = Curl(sym grad u) or grad axl(skw grad u)
QuadraticDensity curvature_density(const MaterialParams& p, CurvatureForm form, double a1, double a2, int ncomp = 3,
                                   int off = 0);
// |grad u|^2 + |Curl(sym grad u)|^2
QuadraticDensity x0_density();
QuadraticDensity mass_density();

class FactorizationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AssembledSystem {
  BasisSpec spec;
  SeparableBasis basis;
  CurvatureForm form = CurvatureForm::Curl;
  Eigen::MatrixXd K;  // (phi_a, phi_b)
  Eigen::VectorXd b;  // integral of <f, phi_a>
  Eigen::MatrixXd G;  // X0 Gram matrix
  Eigen::MatrixXd M;  // L2 mass matrix
};

// Throws InadmissibleParams unless mu > 0, 3 lambda + 2 mu > 0, alpha1 > 0, alpha2 >= 0.
AssembledSystem assemble(const BasisSpec& spec, const MaterialParams& p, const PolyVecField& f,
                         CurvatureForm form = CurvatureForm::Curl);

struct SolveReport {
  Eigen::VectorXd c;
  double energy = 0.0;            // 1/2 c.Kc - b.c at the minimiser
  double residual = 0.0;          // |Kc - b| / |b|, 0 when b = 0
  double coercivity = 0.0;        // smallest generalised eigenvalue of (K, G)
  double min_eigenvalue = 0.0;    // of K
  double symmetry_gap = 0.0;      // max |K - K^T| / max |K|
  std::string factorization = "LLT";
  int dimension = 0;
};

SolveReport solve(const AssembledSystem& sys);
double coercivity_estimate(const AssembledSystem& sys);
double quadratic_energy(const AssembledSystem& sys, const Eigen::VectorXd& c);

// L2 projection of a field onto the span; exact when u lies in the span.
Eigen::VectorXd project(const AssembledSystem& sys, const PolyVecField& u);
double x0_norm(const AssembledSystem& sys, const Eigen::VectorXd& c);
PolyVecField solution_field(const AssembledSystem& sys, const Eigen::VectorXd& c);
Vec3 evaluate_solution(const AssembledSystem& sys, const Eigen::VectorXd& c, const Vec3& x);

// x1(1-x1) x2(1-x2) x3(1-x3)
Poly3 box_bubble(int cap = kSolverDegreeCap);

// Work of the curl-form double force of u on every basis field:
// w_a = boundary integral of sum_i <(sym grad phi_a)_i x m^_i, n>.
// This is (u, phi_a) - integral <-Div(sigma + tau^), phi_a>; it does not vanish
// because the test fields only satisfy u = 0 on the boundary.
Eigen::VectorXd boundary_double_force_work(const AssembledSystem& sys, const PolyVecField& u, const MaterialParams& p);

struct ManufacturedReport {
  double x0_error = 0.0;               // load b_a = integral <f, phi_a>
  double x0_error_with_boundary = 0.0; // load b + boundary double-force work
  double boundary_work_max = 0.0;
  double residual = 0.0;
  double galerkin_orthogonality = 0.0;  // max_a |(u_h - u*, phi_a)| / max|b|
  double energy = 0.0;
  double quadratic_energy = 0.0;
  bool pass = false;
};
// u* = bubble (1,1,1), f = -Div(sigma(u*) + tau^(u*)).
ManufacturedReport manufactured_check(const BasisSpec& spec, const MaterialParams& p, double tol = 1e-8,
                                      CurvatureForm form = CurvatureForm::Curl);

struct CurvatureRatioReport {
  double lhs = 0.0;    // int |sym grad u|^2 + |sym Curl sym grad u|^2
  double rhs = 0.0;    // int |sym grad u|^2 + |Curl sym grad u|^2
  double ratio = 0.0;  // rhs / lhs
  bool degenerate = false;  // both sides zero
};
CurvatureRatioReport curvature_ratio_check(const PolyVecField& u);

nlohmann::json to_json(const SolveReport& r);

}  // namespace cstress
