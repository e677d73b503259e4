#pragma once

#include <stdexcept>
#include <string>

namespace cstress {

class InadmissibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct MaterialParams {
  double mu = 1.0;
  double lambda = 1.0;
  double Lc = 1.0;
  double alpha1 = 1.0;
  double alpha2 = 0.0;
  double eta_prime = 0.0;  // Grioli
  double mu_c = 0.0;       // Cosserat couple modulus
  double kappa_plus = 0.0; // micro-strain / micromorphic coupling

  double bulk() const { return (2.0 * mu + 3.0 * lambda) / 3.0; }
  double mu_L2() const { return mu * Lc * Lc; }

  // mu > 0, 3 lambda + 2 mu > 0, Lc > 0, alpha1, alpha2 >= 0
  void validate() const;
  // validate() plus alpha1 > 0: the hypotheses of the existence result
  void validate_for_solve() const;
};

}  // namespace cstress
