#include "cstress/random_fields.hpp"

namespace cstress {

double FieldRng::uniform(double lo, double hi) {
  // Built from raw engine bits so the stream does not depend on the standard
  // library's distribution implementation.
  double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

Poly3 FieldRng::poly(int deg, int cap) {
  Poly3 p(0.0, cap);
  for (int d = 0; d <= deg; ++d)
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) p.add_term({a, b, d - a - b}, uniform());
  return p;
}

PolyVecField FieldRng::vec_field(int deg, int cap) {
  PolyVecField u;
  for (int i = 0; i < 3; ++i) u[i] = poly(deg, cap);
  return u;
}

PolyMatField FieldRng::mat_field(int deg, int cap) {
  PolyMatField P;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) P(i, j) = poly(deg, cap);
  return P;
}

PolyMatField FieldRng::sym_field(int deg, int cap) {
  PolyMatField P;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      P(i, j) = poly(deg, cap);
      P(j, i) = P(i, j);
    }
  return P;
}

PolyMatField FieldRng::antisym_field(int deg, int cap) {
  return anti_field(vec_field(deg, cap));
}

Vec3 FieldRng::vec() { return Vec3(uniform(), uniform(), uniform()); }

Mat3 FieldRng::mat() {
  Mat3 M;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M(i, j) = uniform();
  return M;
}

Mat3 FieldRng::antisym() { return anti(vec()); }

}  // namespace cstress
