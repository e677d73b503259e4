#pragma once
// Relaxations of the couple-stress model with an independent second field:
//   Cosserat        A in so(3)   mu_c |skw grad u - A|^2       curvature grad axl A
//   Microstrain     e in Sym(3)  k+ |sym grad u - e|^2         curvature Curl e
//   Micromorphic    p full       k+ |grad u - p|^2             curvature Curl sym p
//   Relaxed         p full       k+ |sym(grad u - p)|^2        curvature Curl p (with trace term)
//   FurtherRelaxed  p full       k+ |sym(grad u - p)|^2        curvature Curl p
//   SymCurl         p full       k+ |sym(grad u - p)|^2        |sym Curl p|^2, evaluator only by default
// All carry mu |sym grad u|^2 + lambda/2 tr^2.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cstress/galerkin.hpp"
#include "cstress/params.hpp"
#include "cstress/random_fields.hpp"
#include "cstress/solver.hpp"

namespace cstress {

enum class MicromorphicModel { Cosserat, Microstrain, Micromorphic, Relaxed, FurtherRelaxed, SymCurl };
enum class CompanionClass { Skew, Sym, Full };

std::string to_string(MicromorphicModel m);
MicromorphicModel micromorphic_model_from_name(const std::string& s);
CompanionClass companion_class(MicromorphicModel m);

// Curvature coefficients:
//   Cosserat        c1 dev sym, c2 skw, c3 trace      (of grad axl A)
//   Microstrain     c1 dev sym, c2 skw                (beta1, beta3)
//   Micromorphic    c1 dev sym, c2 skw                (gamma1, gamma3)
//   Relaxed         c1 dev sym, c2 skw, c3 trace      (scaled by mu Lc^2)
//   FurtherRelaxed  c1 dev sym, c2 skw
//   SymCurl         c1 on |sym Curl p|^2
struct MicromorphicSpec {
  MicromorphicModel model = MicromorphicModel::Cosserat;
  double c1 = 1.0, c2 = 0.0, c3 = 0.0;
  double penalty = 1.0;  // mu_c for Cosserat, k+ otherwise

  // c1 = alpha1, c2 = c3 = alpha2, penalty = mu_c or kappa_plus
  static MicromorphicSpec from_params(MicromorphicModel m, const MaterialParams& p);
  void validate() const;
};

class ClassMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularSystem : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CoupledState {
  PolyVecField u;
  PolyMatField field;
};

// Throws ClassMismatch when the companion field is outside the model's class (coefficient tol 1e-12).
void check_class(const CoupledState& s, MicromorphicModel m, double tol = 1e-12);

Poly3 micromorphic_energy(const CoupledState& s, const MicromorphicSpec& spec, const MaterialParams& p);
Poly3 coupling_density(const CoupledState& s, MicromorphicModel m);  // without the penalty modulus
PolyMatField force_stress(const CoupledState& s, const MicromorphicSpec& spec, const MaterialParams& p);
PolyMatField hyperstress(const CoupledState& s, const MicromorphicSpec& spec, const MaterialParams& p);

// Companion discretisation. Free: shifted Legendre up to per-axis degree N+1, no boundary
// condition, so the span contains skw/sym grad of every displacement field in the span.
// Bubble: the displacement bubble family.
enum class CompanionBasis { Free, Bubble };
CompanionBasis default_companion_basis(MicromorphicModel m);

struct CoupledSystem {
  MicromorphicSpec spec;
  SeparableBasis basis;  // 12 components: u then the 9 matrix entries
  int n_u = 0;
  MatXR A_base;  // elastic + curvature
  MatXR A_pen;   // coupling with unit modulus
  VecXR b;
};

CoupledSystem assemble_coupled(const MicromorphicSpec& spec, const MaterialParams& p, int N, const PolyVecField& f,
                               std::optional<CompanionBasis> companion = std::nullopt);

struct CoupledSolveReport {
  CoupledState state;
  VecXR c;
  double energy = 0.0;     // -1/2 b.c
  double residual = 0.0;   // |Kc - b| / |b|
  double violation = 0.0;  // L2 norm of the coupling difference
  double stress_skew = 0.0;  // max coefficient of skw(sigma)
  int dimension = 0;
};

// Solves with the penalty stored in sys.spec unless one is given.
// SymCurl throws unless allow_experimental is set.
CoupledSolveReport coupled_solve(const CoupledSystem& sys, const MaterialParams& p,
                                 std::optional<double> penalty = std::nullopt, bool allow_experimental = false);

// Minimum energy of the constrained displacement model on the same displacement basis;
// empty for models whose constrained limit is not a displacement model.
std::optional<double> constrained_energy(const MicromorphicSpec& spec, const MaterialParams& p, int N,
                                         const PolyVecField& f);

struct LimitRow {
  double penalty = 0.0;
  double violation = 0.0;
  double energy = 0.0;
  std::optional<double> gap;  // constrained energy - energy
  double stress_skew = 0.0;
  double residual = 0.0;
};

struct LimitStudy {
  MicromorphicModel model{};
  std::vector<LimitRow> rows;
  std::optional<double> constrained;
  bool violation_decreasing = false;
  bool energy_increasing = false;
  bool bounded_above = false;  // true when no constrained value exists
  std::vector<double> observed_rates;  // -log(v_{k+1}/v_k) / log(pen_{k+1}/pen_k)
  bool pass() const { return violation_decreasing && energy_increasing && bounded_above; }
};

LimitStudy penalty_limit_study(const MicromorphicSpec& spec, const MaterialParams& p, int N, const PolyVecField& f,
                               const std::vector<double>& ladder, bool allow_experimental = false);

struct InvarianceCheck {
  std::string model;
  double max_diff = 0.0;
  bool pass = false;
};
// Energy unchanged under the model's gauge: (u + Wx + b, field + W) for Cosserat/Micromorphic,
// (u + Wx + b, e) for Microstrain, (u + Wx + b, p + W') for the relaxed family.
InvarianceCheck invariance_check(const MicromorphicSpec& spec, const MaterialParams& p, FieldRng& rng,
                                 double tol = 1e-10);

CoupledState random_state(MicromorphicModel m, FieldRng& rng, int u_degree = 3, int field_degree = 2);

nlohmann::json to_json(const LimitStudy& s);

}  // namespace cstress
