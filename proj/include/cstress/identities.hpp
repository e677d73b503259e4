#pragma once
// Exact checks of the compatibility identities for polynomial fields.

#include <optional>
#include <string>

#include <json.hpp>

#include "cstress/poly.hpp"

namespace cstress {

struct IdentityReport {
  std::string name;
  double discrepancy = 0.0;  // max |coefficient| of lhs - rhs
  bool pass = false;
  std::optional<Vec3> witness;  // point of largest pointwise mismatch, on failure
};

inline constexpr double kIdentityTol = 1e-12;

// Locates a point in [0,1]^3 where the residual field is largest (sampled).
Vec3 witness_point(const PolyMatField& residual);

// -Curl A = (grad axl A)^T - tr[(grad axl A)^T] Id, and the inverse
// grad axl A = -(Curl A)^T + 1/2 tr[(Curl A)^T] Id.
IdentityReport nye_check(const PolyMatField& A, double tol = kIdentityTol);

// grad[axl(skw grad u)] = [Curl(sym grad u)]^T
IdentityReport master_identity_check(const PolyVecField& u, double tol = kIdentityTol);

struct ConverseResult {
  bool is_gradient = false;  // Curl p == 0
  IdentityReport report;
};
// Tests grad[axl skw p] = [Curl(sym p)]^T on an arbitrary matrix field.
ConverseResult master_identity_converse(const PolyMatField& p, double tol = kIdentityTol);

// [grad curl u]^T = Curl[(grad u)^T]
IdentityReport curl_transpose_check(const PolyVecField& u, double tol = kIdentityTol);

// inc(eps) = Curl[(Curl eps)^T]; eps must be symmetric.
PolyMatField saint_venant_inc(const PolyMatField& eps, double tol = kIdentityTol);

// INC(p) = [Curl(sym p)]^T - grad[axl skw p]
PolyMatField first_order_inc(const PolyMatField& p);

// tr Curl p = 2 div(axl skw p) and tr Curl(sym p) = 0
IdentityReport trace_relations_check(const PolyMatField& p, double tol = kIdentityTol);

// Curl(INC(p)) = inc(sym p)
IdentityReport inc_curl_check(const PolyMatField& p, double tol = kIdentityTol);

// Gradient of u plus a single off-gradient monomial; Curl of the result is nonzero.
PolyMatField incompatible_field(const PolyVecField& u, int row, int col, const Exp& e, double c = 1.0);

nlohmann::json to_json(const IdentityReport& r);

}  // namespace cstress
