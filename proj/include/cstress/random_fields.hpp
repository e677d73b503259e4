#pragma once
// Seeded generators for test fields. One engine per run keeps outputs reproducible.

#include <cstdint>
#include <random>

#include "cstress/poly.hpp"

namespace cstress {

class FieldRng {
 public:
  explicit FieldRng(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo = -1.0, double hi = 1.0);

  // All monomials of total degree <= deg with coefficients uniform in [-1,1].
  Poly3 poly(int deg, int cap = kDefaultDegreeCap);
  PolyVecField vec_field(int deg, int cap = kDefaultDegreeCap);
  PolyMatField mat_field(int deg, int cap = kDefaultDegreeCap);
  PolyMatField sym_field(int deg, int cap = kDefaultDegreeCap);
  PolyMatField antisym_field(int deg, int cap = kDefaultDegreeCap);

  Vec3 vec();
  Mat3 mat();
  Mat3 antisym();

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace cstress
