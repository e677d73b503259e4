#pragma once
// Finite-difference oracle on uniform grids. Uses only point samples of a field,
// never the polynomial derivative code, so it checks the exact operators independently.

#include <array>
#include <cstdint>
#include <string>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "cstress/poly.hpp"

namespace cstress::oracle {

struct GridSpec {
  Vec3 lo = Vec3::Zero();
  double h = 0.125;
  int n = 9;  // points per axis

  static GridSpec unit_box(double h);
  Vec3 point(int i, int j, int k) const { return lo + h * Vec3(i, j, k); }
};

template <class V>
struct GridField {
  GridSpec g;
  std::vector<V> v;

  const V& at(int i, int j, int k) const { return v[(static_cast<size_t>(i) * g.n + j) * g.n + k]; }
  const V& at(const std::array<int, 3>& p) const { return at(p[0], p[1], p[2]); }
};

GridField<double> sample(const Poly3& f, const GridSpec& g);
GridField<Vec3> sample(const PolyVecField& u, const GridSpec& g);
GridField<Mat3> sample(const PolyMatField& P, const GridSpec& g);

using Node = std::array<int, 3>;

// Central first difference along axis a.
template <class V>
V d1(const GridField<V>& f, Node p, int a) {
  Node q = p, r = p;
  ++q[a];
  --r[a];
  if (r[a] < 0 || q[a] >= f.g.n) throw std::out_of_range("stencil leaves the grid");
  return (f.at(q) - f.at(r)) / (2.0 * f.g.h);
}

// Central second difference d^2/dx_a dx_b.
template <class V>
V d2(const GridField<V>& f, Node p, int a, int b) {
  if (a == b) {
    Node q = p, r = p;
    ++q[a];
    --r[a];
    return (f.at(q) - 2.0 * f.at(p) + f.at(r)) / (f.g.h * f.g.h);
  }
  auto shift = [&](int sa, int sb) {
    Node q = p;
    q[a] += sa;
    q[b] += sb;
    return f.at(q);
  };
  return (shift(1, 1) - shift(1, -1) - shift(-1, 1) + shift(-1, -1)) / (4.0 * f.g.h * f.g.h);
}

Vec3 fd_grad(const GridField<double>& f, Node p);
Mat3 fd_grad(const GridField<Vec3>& u, Node p);
double fd_div(const GridField<Vec3>& u, Node p);
Vec3 fd_curl(const GridField<Vec3>& u, Node p);
Mat3 fd_curl_mat(const GridField<Mat3>& P, Node p);
Vec3 fd_div_mat(const GridField<Mat3>& P, Node p);
Ten3 fd_grad_mat(const GridField<Mat3>& P, Node p);
Ten3 fd_second_gradient(const GridField<Vec3>& u, Node p);

// Interior nodes of the coarsest grid (spacing H) expressed on a grid of spacing h;
// errors are measured only there so every h sees the same physical points.
std::vector<Node> common_nodes(const GridSpec& g, double H);

double observed_order(double err_coarse, double err_fine, double ratio = 2.0);

struct OracleRow {
  std::string op;
  std::array<double, 3> err{};  // max error over fields at h = 1/8, 1/16, 1/32
  double min_order = 0.0;       // smallest observed order over fields and consecutive h pairs
  bool pass = false;
};

// Every exact differential operator against its difference quotient, on `fields` random
// fields of the given degree, errors taken on the interior nodes of the h = 1/8 grid.
std::vector<OracleRow> convergence_suite(std::uint64_t seed, int fields = 10, int degree = 4,
                                         double min_order = 1.9);

}  // namespace cstress::oracle
