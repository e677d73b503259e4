#include "cstress/grid_oracle.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>

#include "cstress/random_fields.hpp"

namespace cstress::oracle {

GridSpec GridSpec::unit_box(double h) {
  GridSpec g;
  g.h = h;
  g.n = static_cast<int>(std::lround(1.0 / h)) + 1;
  if (g.n < 5) throw std::invalid_argument("grid needs at least 5 points per axis");
  return g;
}

namespace {

template <class V, class F>
GridField<V> sample_with(const GridSpec& g, F&& f) {
  GridField<V> out{g, {}};
  out.v.reserve(static_cast<size_t>(g.n) * g.n * g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k) out.v.push_back(f(g.point(i, j, k)));
  return out;
}

}  // namespace

GridField<double> sample(const Poly3& f, const GridSpec& g) {
  return sample_with<double>(g, [&](const Vec3& x) { return f.eval(x); });
}

GridField<Vec3> sample(const PolyVecField& u, const GridSpec& g) {
  return sample_with<Vec3>(g, [&](const Vec3& x) { return u.eval(x); });
}

GridField<Mat3> sample(const PolyMatField& P, const GridSpec& g) {
  return sample_with<Mat3>(g, [&](const Vec3& x) { return P.eval(x); });
}

Vec3 fd_grad(const GridField<double>& f, Node p) { return Vec3(d1(f, p, 0), d1(f, p, 1), d1(f, p, 2)); }

Mat3 fd_grad(const GridField<Vec3>& u, Node p) {
  Mat3 G;
  for (int j = 0; j < 3; ++j) G.col(j) = d1(u, p, j);
  return G;
}

double fd_div(const GridField<Vec3>& u, Node p) { return fd_grad(u, p).trace(); }

Vec3 fd_curl(const GridField<Vec3>& u, Node p) {
  Mat3 G = fd_grad(u, p);
  return Vec3(G(2, 1) - G(1, 2), G(0, 2) - G(2, 0), G(1, 0) - G(0, 1));
}

Mat3 fd_curl_mat(const GridField<Mat3>& P, Node p) {
  std::array<Mat3, 3> dP{d1(P, p, 0), d1(P, p, 1), d1(P, p, 2)};
  Mat3 C;
  for (int i = 0; i < 3; ++i) {
    C(i, 0) = dP[1](i, 2) - dP[2](i, 1);
    C(i, 1) = dP[2](i, 0) - dP[0](i, 2);
    C(i, 2) = dP[0](i, 1) - dP[1](i, 0);
  }
  return C;
}

Vec3 fd_div_mat(const GridField<Mat3>& P, Node p) {
  Vec3 d = Vec3::Zero();
  for (int j = 0; j < 3; ++j) d += d1(P, p, j).col(j);
  return d;
}

Ten3 fd_grad_mat(const GridField<Mat3>& P, Node p) {
  Ten3 T;
  for (int k = 0; k < 3; ++k) {
    Mat3 dk = d1(P, p, k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) T(i, j, k) = dk(i, j);
  }
  return T;
}

Ten3 fd_second_gradient(const GridField<Vec3>& u, Node p) {
  Ten3 D;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Vec3 dij = d2(u, p, i, j);
      for (int k = 0; k < 3; ++k) D(k, i, j) = dij(k);
    }
  return D;
}

std::vector<Node> common_nodes(const GridSpec& g, double H) {
  int stride = static_cast<int>(std::lround(H / g.h));
  int m = static_cast<int>(std::lround(1.0 / H));
  if (stride < 1 || std::abs(stride * g.h - H) > 1e-14) throw std::invalid_argument("grid does not refine H");
  std::vector<Node> out;
  for (int a = 1; a < m; ++a)
    for (int b = 1; b < m; ++b)
      for (int c = 1; c < m; ++c) out.push_back({a * stride, b * stride, c * stride});
  return out;
}

double observed_order(double err_coarse, double err_fine, double ratio) {
  return std::log(err_coarse / err_fine) / std::log(ratio);
}

namespace {

template <class T>
double max_abs(const T& a) {
  if constexpr (std::is_arithmetic_v<T>)
    return std::abs(a);
  else if constexpr (std::is_same_v<T, Ten3>)
    return a.max_abs();
  else
    return a.cwiseAbs().maxCoeff();
}

// curvature measures from a second gradient by index formulas
Mat3 k_hat_of(const Ten3& D) {
  Mat3 K = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (int e = levi_civita(j, a, b)) K(i, j) += e * 0.5 * (D(i, b, a) + D(b, i, a));
  return K;
}

Mat3 k_tilde_of(const Ten3& D) {
  Mat3 K = Mat3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l < 3; ++l)
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (int e = levi_civita(i, a, b)) K(i, l) -= 0.5 * e * D(a, b, l);
  return K;
}

struct Fields {
  Poly3 f;
  PolyVecField u;
  PolyMatField P;
};

// error of one operator on one field at one spacing
using Probe = std::function<double(const Fields&, const GridSpec&, const std::vector<Node>&)>;

template <class Exact, class Grid, class Fd>
double probe_err(const Exact& exact, const Grid& grid, const GridSpec& g, const std::vector<Node>& nodes, Fd&& fd) {
  double e = 0.0;
  for (const Node& n : nodes) e = std::max(e, max_abs(fd(grid, n) - exact.eval(g.point(n[0], n[1], n[2]))));
  return e;
}

}  // namespace

std::vector<OracleRow> convergence_suite(std::uint64_t seed, int fields, int degree, double min_order) {
  FieldRng rng(seed);
  std::vector<Fields> fs;
  for (int t = 0; t < fields; ++t) fs.push_back({rng.poly(degree), rng.vec_field(degree), rng.mat_field(degree)});

  std::vector<std::pair<std::string, Probe>> probes;
  probes.emplace_back("grad_scalar", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(grad(F.f), sample(F.f, g), g, n, [](auto& G, Node p) { return fd_grad(G, p); });
  });
  probes.emplace_back("grad_vector", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(grad(F.u), sample(F.u, g), g, n, [](auto& G, Node p) { return fd_grad(G, p); });
  });
  probes.emplace_back("div_vector", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(div(F.u), sample(F.u, g), g, n, [](auto& G, Node p) { return fd_div(G, p); });
  });
  probes.emplace_back("curl_vector", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(curl_vec(F.u), sample(F.u, g), g, n, [](auto& G, Node p) { return fd_curl(G, p); });
  });
  probes.emplace_back("curl_matrix", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(curl_mat(F.P), sample(F.P, g), g, n, [](auto& G, Node p) { return fd_curl_mat(G, p); });
  });
  probes.emplace_back("div_matrix", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(div_mat(F.P), sample(F.P, g), g, n, [](auto& G, Node p) { return fd_div_mat(G, p); });
  });
  probes.emplace_back("grad_matrix", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(grad(F.P), sample(F.P, g), g, n, [](auto& G, Node p) { return fd_grad_mat(G, p); });
  });
  probes.emplace_back("second_gradient", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(second_gradient(F.u), sample(F.u, g), g, n,
                     [](auto& G, Node p) { return fd_second_gradient(G, p); });
  });
  probes.emplace_back("curl_sym_grad", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(curl_mat(sym(grad(F.u))), sample(F.u, g), g, n,
                     [](auto& G, Node p) { return k_hat_of(fd_second_gradient(G, p)); });
  });
  probes.emplace_back("grad_axl_skw_grad", [](const Fields& F, const GridSpec& g, const std::vector<Node>& n) {
    return probe_err(grad(axl_field(skw(grad(F.u)))), sample(F.u, g), g, n,
                     [](auto& G, Node p) { return k_tilde_of(fd_second_gradient(G, p)); });
  });

  const std::array<double, 3> hs{1.0 / 8, 1.0 / 16, 1.0 / 32};
  std::array<GridSpec, 3> grids;
  std::array<std::vector<Node>, 3> nodes;
  for (int i = 0; i < 3; ++i) {
    grids[i] = GridSpec::unit_box(hs[i]);
    nodes[i] = common_nodes(grids[i], hs[0]);
  }

  std::vector<OracleRow> rows;
  for (const auto& [name, probe] : probes) {
    OracleRow r;
    r.op = name;
    r.min_order = 1e300;
    for (const Fields& F : fs) {
      std::array<double, 3> e{};
      for (int i = 0; i < 3; ++i) {
        e[i] = probe(F, grids[i], nodes[i]);
        r.err[i] = std::max(r.err[i], e[i]);
      }
      for (int i = 0; i < 2; ++i) r.min_order = std::min(r.min_order, observed_order(e[i], e[i + 1]));
    }
    r.pass = r.min_order >= min_order;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace cstress::oracle
