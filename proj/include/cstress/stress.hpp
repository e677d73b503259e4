#pragma once
// Constitutive stresses of both formulations of the indeterminate couple stress model.

#include <json.hpp>

#include "cstress/params.hpp"
#include "cstress/poly.hpp"

namespace cstress {

struct StressState {
  PolyMatField sigma;      // 2 mu sym grad u + lambda tr(grad u) Id
  PolyMatField m_tilde;    // mu Lc^2 [2 a1 dev sym k~ + 2 a2 skw k~]
  PolyMatField tau_tilde;  // 1/2 anti(Div m~)
  PolyMatField m_hat;      // mu Lc^2 [2 a1 dev sym k^ + 2 a2 skw k^]
  PolyMatField tau_hat;    // sym Curl m^
};

StressState assemble(const PolyVecField& u, const MaterialParams& p);

enum class Formulation { Axl, Curl };

// Axl: Div(sigma - tau~) + f.  Curl: Div(sigma + tau^) + f.
PolyVecField equilibrium_residual(const PolyVecField& u, const PolyVecField& f, const MaterialParams& p,
                                  Formulation form);
PolyVecField equilibrium_residual(const StressState& s, const PolyVecField& f, Formulation form);

// Body force that makes u an exact solution of the curl form.
PolyVecField manufactured_load(const PolyVecField& u, const MaterialParams& p);

struct CoupleStressRelationReport {
  double sym_gap = 0.0;        // |sym m~ - sym m^|
  double equal_gap = 0.0;      // |m~ - m^|, meaningful for alpha2 = 0
  double opposite_gap = 0.0;   // |m~ + m^|, meaningful for alpha1 = 0
  double transpose_gap = 0.0;  // |m~ - m^T|
  bool pass = false;
};
CoupleStressRelationReport couple_stress_relation_check(const PolyVecField& u, const MaterialParams& p,
                                                        double tol = 1e-12);

nlohmann::json to_json(const StressState& s);

}  // namespace cstress
