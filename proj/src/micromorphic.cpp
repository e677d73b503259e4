#include "cstress/micromorphic.hpp"

#include <cmath>

#include <Eigen/Cholesky>

namespace cstress {

std::string to_string(MicromorphicModel m) {
  switch (m) {
    case MicromorphicModel::Cosserat: return "cosserat";
    case MicromorphicModel::Microstrain: return "microstrain";
    case MicromorphicModel::Micromorphic: return "micromorphic";
    case MicromorphicModel::Relaxed: return "relaxed";
    case MicromorphicModel::FurtherRelaxed: return "further_relaxed";
    case MicromorphicModel::SymCurl: return "sym_curl";
  }
  return "?";
}

MicromorphicModel micromorphic_model_from_name(const std::string& s) {
  for (auto m : {MicromorphicModel::Cosserat, MicromorphicModel::Microstrain, MicromorphicModel::Micromorphic,
                 MicromorphicModel::Relaxed, MicromorphicModel::FurtherRelaxed, MicromorphicModel::SymCurl})
    if (to_string(m) == s) return m;
  throw std::invalid_argument("unknown micromorphic model '" + s + "'");
}

CompanionClass companion_class(MicromorphicModel m) {
  switch (m) {
    case MicromorphicModel::Cosserat: return CompanionClass::Skew;
    case MicromorphicModel::Microstrain: return CompanionClass::Sym;
    default: return CompanionClass::Full;
  }
}

MicromorphicSpec MicromorphicSpec::from_params(MicromorphicModel m, const MaterialParams& p) {
  MicromorphicSpec s;
  s.model = m;
  s.c1 = p.alpha1;
  s.c2 = p.alpha2;
  s.c3 = p.alpha2;
  s.penalty = m == MicromorphicModel::Cosserat ? p.mu_c : p.kappa_plus;
  return s;
}

void MicromorphicSpec::validate() const {
  if (c1 < 0 || c2 < 0 || c3 < 0) throw InadmissibleParams("curvature coefficients must be nonnegative");
  if (penalty < 0) throw InadmissibleParams("penalty modulus must be nonnegative");
}

void check_class(const CoupledState& s, MicromorphicModel m, double tol) {
  switch (companion_class(m)) {
    case CompanionClass::Skew:
      if (sym(s.field).max_abs_coeff() > tol) throw ClassMismatch(to_string(m) + " needs an antisymmetric field");
      break;
    case CompanionClass::Sym:
      if (skw(s.field).max_abs_coeff() > tol) throw ClassMismatch(to_string(m) + " needs a symmetric field");
      break;
    case CompanionClass::Full:
      break;
  }
}

// ---- polynomial densities ----

namespace {

Poly3 sq(const Poly3& a) { return a * a; }

PolyMatField companion_curvature(const CoupledState& s, MicromorphicModel m) {
  switch (m) {
    case MicromorphicModel::Cosserat: return grad(axl_field(s.field));
    case MicromorphicModel::Micromorphic: return curl_mat(sym(s.field));
    default: return curl_mat(s.field);
  }
}

}  // namespace

Poly3 coupling_density(const CoupledState& s, MicromorphicModel m) {
  PolyMatField G = grad(s.u);
  switch (m) {
    case MicromorphicModel::Cosserat: return frob2(skw(G) - s.field);
    case MicromorphicModel::Microstrain: return frob2(sym(G) - s.field);
    case MicromorphicModel::Micromorphic: return frob2(G - s.field);
    default: return frob2(sym(G - s.field));
  }
}

Poly3 micromorphic_energy(const CoupledState& s, const MicromorphicSpec& spec, const MaterialParams& p) {
  check_class(s, spec.model);
  PolyMatField G = grad(s.u);
  Poly3 w = p.mu * frob2(sym(G)) + (0.5 * p.lambda) * sq(G.trace());
  w += spec.penalty * coupling_density(s, spec.model);
  PolyMatField K = companion_curvature(s, spec.model);
  Poly3 c;
  if (spec.model == MicromorphicModel::SymCurl) {
    c = spec.c1 * frob2(sym(K));
  } else {
    c = spec.c1 * frob2(dev_sym(K)) + spec.c2 * frob2(skw(K));
    if (spec.model == MicromorphicModel::Cosserat || spec.model == MicromorphicModel::Relaxed)
      c += spec.c3 * sq(K.trace());
  }
  return w + p.mu_L2() * c;
}

PolyMatField force_stress(const CoupledState& s, const MicromorphicSpec& spec, const MaterialParams& p) {
  PolyMatField G = grad(s.u);
  PolyMatField sig = (2.0 * p.mu) * sym(G) + PolyMatField::identity_times(p.lambda * G.trace());
  PolyMatField d;
  switch (spec.model) {
    case MicromorphicModel::Cosserat: d = skw(G) - s.field; break;
    case MicromorphicModel::Microstrain: d = sym(G) - s.field; break;
    case MicromorphicModel::Micromorphic: d = G - s.field; break;
    default: d = sym(G - s.field); break;
  }
  return sig + (2.0 * spec.penalty) * d;
}

PolyMatField hyperstress(const CoupledState& s, const MicromorphicSpec& spec, const MaterialParams& p) {
  PolyMatField K = companion_curvature(s, spec.model);
  PolyMatField m;
  if (spec.model == MicromorphicModel::SymCurl) {
    m = spec.c1 * sym(K);
  } else {
    m = spec.c1 * dev_sym(K) + spec.c2 * skw(K);
    if (spec.model == MicromorphicModel::Cosserat || spec.model == MicromorphicModel::Relaxed)
      m += PolyMatField::identity_times(spec.c3 * K.trace());
  }
  return (2.0 * p.mu_L2()) * m;
}

// ---- discrete system ----

CompanionBasis default_companion_basis(MicromorphicModel m) {
  // models whose constrained limit is a displacement model need grad u inside the companion span
  switch (m) {
    case MicromorphicModel::Cosserat:
    case MicromorphicModel::Microstrain:
    case MicromorphicModel::Micromorphic:
      return CompanionBasis::Free;
    default:
      return CompanionBasis::Bubble;
  }
}

namespace {

constexpr int kComp = 12;
constexpr int kField = 3;

Eigen::VectorXd field_dir(const Mat3& E) {
  Eigen::VectorXd d = Eigen::VectorXd::Zero(kComp);
  d.segment(kField, 9) = flat_mat(E);
  return d;
}

std::vector<Eigen::VectorXd> companion_dirs(CompanionClass c) {
  std::vector<Eigen::VectorXd> dirs;
  switch (c) {
    case CompanionClass::Skew:
      for (int i = 0; i < 3; ++i) dirs.push_back(field_dir(anti(Vec3::Unit(i))));
      break;
    case CompanionClass::Sym:
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          Mat3 E = Mat3::Zero();
          E(i, j) = 1.0;
          E(j, i) = 1.0;
          dirs.push_back(field_dir(E));
        }
      break;
    case CompanionClass::Full:
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Mat3 E = Mat3::Zero();
          E(i, j) = 1.0;
          dirs.push_back(field_dir(E));
        }
      break;
  }
  return dirs;
}

Mat3 jet_companion_curvature(const JetView& j, MicromorphicModel m) {
  Ten3 G = j.grad_mat(kField);
  switch (m) {
    case MicromorphicModel::Cosserat: {
      // grad axl(A): K_il = -1/2 eps_ijk A_{jk,l}
      Mat3 K = Mat3::Zero();
      for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l)
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b)
              if (int e = levi_civita(i, a, b)) K(i, l) -= 0.5 * e * G(a, b, l);
      return K;
    }
    case MicromorphicModel::Micromorphic: {
      Ten3 S;
      for (int i = 0; i < 3; ++i)
        for (int b = 0; b < 3; ++b)
          for (int a = 0; a < 3; ++a) S(i, b, a) = 0.5 * (G(i, b, a) + G(b, i, a));
      return curl_from_grad(S);
    }
    default:
      return curl_from_grad(G);
  }
}

Eigen::VectorXd scalar(double v) {
  Eigen::VectorXd r(1);
  r(0) = v;
  return r;
}

QuadraticDensity base_density(const MicromorphicSpec& spec, const MaterialParams& p) {
  QuadraticDensity d = elastic_density(p, kComp, 0);
  const double s = p.mu_L2();
  const auto m = spec.model;
  auto K = [m](const JetView& j) { return jet_companion_curvature(j, m); };
  if (m == MicromorphicModel::SymCurl) {
    d.add(s * spec.c1, [K](const JetView& j) { return flat_mat(sym(K(j))); });
    return d;
  }
  d.add(s * spec.c1, [K](const JetView& j) { return flat_mat(dev_sym(K(j))); });
  d.add(s * spec.c2, [K](const JetView& j) { return flat_mat(skw(K(j))); });
  if (m == MicromorphicModel::Cosserat || m == MicromorphicModel::Relaxed)
    d.add(s * spec.c3, [K](const JetView& j) { return scalar(K(j).trace()); });
  return d;
}

QuadraticDensity penalty_density(MicromorphicModel m) {
  QuadraticDensity d(kComp);
  d.add(1.0, [m](const JetView& j) {
    Mat3 G = j.grad_vec(0), P = j.mat(kField);
    switch (m) {
      case MicromorphicModel::Cosserat: return flat_mat(skw(G) - P);
      case MicromorphicModel::Microstrain: return flat_mat(sym(G) - P);
      case MicromorphicModel::Micromorphic: return flat_mat(G - P);
      default: return flat_mat(sym(G - P));
    }
  });
  return d;
}

}  // namespace

CoupledSystem assemble_coupled(const MicromorphicSpec& spec, const MaterialParams& p, int N, const PolyVecField& f,
                               std::optional<CompanionBasis> companion) {
  p.validate();
  spec.validate();
  if (N < 1 || N > kMaxModes) throw std::invalid_argument("modes per axis must lie in [1, 4]");
  CoupledSystem sys;
  sys.spec = spec;
  sys.basis.ncomp = kComp;
  std::vector<Eigen::VectorXd> udirs;
  for (int c = 0; c < 3; ++c) udirs.push_back(Eigen::VectorXd::Unit(kComp, c));
  sys.basis.append_block(bubble_family(N), udirs);
  sys.n_u = sys.basis.size();
  CompanionBasis cb = companion.value_or(default_companion_basis(spec.model));
  sys.basis.append_block(cb == CompanionBasis::Free ? legendre_family(N + 2) : bubble_family(N),
                         companion_dirs(companion_class(spec.model)));
  sys.A_base = assemble_form(sys.basis, base_density(spec, p));
  sys.A_pen = assemble_form(sys.basis, penalty_density(spec.model));
  sys.b = assemble_load(sys.basis, f, 0);
  return sys;
}

CoupledSolveReport coupled_solve(const CoupledSystem& sys, const MaterialParams& p, std::optional<double> penalty,
                                 bool allow_experimental) {
  if (sys.spec.model == MicromorphicModel::SymCurl && !allow_experimental)
    throw std::invalid_argument("the symmetric-Curl model solve is experimental; enable it explicitly");
  MicromorphicSpec spec = sys.spec;
  if (penalty) spec.penalty = *penalty;
  MatXR K = Real(2) * (sys.A_base + Real(spec.penalty) * sys.A_pen);
  Eigen::LLT<MatXR> llt(K);
  if (llt.info() != Eigen::Success)
    throw SingularSystem("coupled stiffness is not positive definite (degenerate parameters?)");
  CoupledSolveReport r;
  r.dimension = static_cast<int>(K.rows());
  r.c = llt.solve(sys.b);
  const Real bn = sys.b.norm();
  r.residual = double(bn > 0 ? (K * r.c - sys.b).norm() / bn : (K * r.c).norm());
  r.energy = double(-0.5L * sys.b.dot(r.c));
  r.violation = double(std::sqrt(std::max(Real(0), r.c.dot(sys.A_pen * r.c))));
  auto polys = to_polys(sys.basis, r.c, 3 * kSolverDegreeCap);
  for (int i = 0; i < 3; ++i) r.state.u[i] = polys[i];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.state.field(i, j) = polys[kField + 3 * i + j];
  r.stress_skew = skw(force_stress(r.state, spec, p)).max_abs_coeff();
  return r;
}

std::optional<double> constrained_energy(const MicromorphicSpec& spec, const MaterialParams& p, int N,
                                         const PolyVecField& f) {
  switch (spec.model) {
    case MicromorphicModel::Cosserat:
    case MicromorphicModel::Microstrain:
    case MicromorphicModel::Micromorphic:
      break;
    default:
      return std::nullopt;
  }
  SeparableBasis B = make_displacement_basis({BasisFamily::Bubble, N});
  QuadraticDensity d = elastic_density(p);
  MatXR A = assemble_form(B, d) + assemble_form(B, curvature_density(p, CurvatureForm::Curl, spec.c1, spec.c2));
  MatXR K = Real(2) * A;
  VecXR b = assemble_load(B, f);
  Eigen::LLT<MatXR> llt(K);
  if (llt.info() != Eigen::Success) throw SingularSystem("constrained stiffness is not positive definite");
  VecXR c = llt.solve(b);
  return double(-0.5L * b.dot(c));
}

LimitStudy penalty_limit_study(const MicromorphicSpec& spec, const MaterialParams& p, int N, const PolyVecField& f,
                               const std::vector<double>& ladder, bool allow_experimental) {
  if (ladder.empty()) throw std::invalid_argument("empty penalty ladder");
  for (size_t i = 0; i < ladder.size(); ++i)
    if (ladder[i] <= 0 || (i > 0 && ladder[i] <= ladder[i - 1]))
      throw std::invalid_argument("penalty ladder must be positive and strictly increasing");
  CoupledSystem sys = assemble_coupled(spec, p, N, f);
  LimitStudy st;
  st.model = spec.model;
  st.constrained = constrained_energy(spec, p, N, f);
  for (double pen : ladder) {
    CoupledSolveReport r = coupled_solve(sys, p, pen, allow_experimental);
    LimitRow row;
    row.penalty = pen;
    row.violation = r.violation;
    row.energy = r.energy;
    row.residual = r.residual;
    row.stress_skew = r.stress_skew;
    if (st.constrained) row.gap = *st.constrained - r.energy;
    st.rows.push_back(row);
  }
  st.violation_decreasing = st.energy_increasing = true;
  st.bounded_above = true;
  for (size_t i = 0; i < st.rows.size(); ++i) {
    if (st.constrained && st.rows[i].energy > *st.constrained) st.bounded_above = false;
    if (i == 0) continue;
    const LimitRow &a = st.rows[i - 1], &b = st.rows[i];
    if (!(b.violation < a.violation)) st.violation_decreasing = false;
    if (!(b.energy > a.energy)) st.energy_increasing = false;
    st.observed_rates.push_back(-std::log(b.violation / a.violation) / std::log(b.penalty / a.penalty));
  }
  return st;
}

CoupledState random_state(MicromorphicModel m, FieldRng& rng, int u_degree, int field_degree) {
  CoupledState s;
  s.u = rng.vec_field(u_degree);
  switch (companion_class(m)) {
    case CompanionClass::Skew: s.field = rng.antisym_field(field_degree); break;
    case CompanionClass::Sym: s.field = rng.sym_field(field_degree); break;
    case CompanionClass::Full: s.field = rng.mat_field(field_degree); break;
  }
  return s;
}

InvarianceCheck invariance_check(const MicromorphicSpec& spec, const MaterialParams& p, FieldRng& rng, double tol) {
  CoupledState s = random_state(spec.model, rng);
  Mat3 W = rng.antisym(), W2 = rng.antisym();
  Vec3 b = rng.vec();
  PolyVecField x{{Poly3::var(0), Poly3::var(1), Poly3::var(2)}};
  CoupledState t = s;
  t.u = s.u + PolyMatField::constant(W) * x;
  for (int i = 0; i < 3; ++i) t.u[i] += Poly3(b(i));
  switch (spec.model) {
    case MicromorphicModel::Cosserat:
    case MicromorphicModel::Micromorphic:
      t.field = s.field + PolyMatField::constant(W);
      break;
    case MicromorphicModel::Microstrain:
      break;
    default:
      t.field = s.field + PolyMatField::constant(W2);
      break;
  }
  InvarianceCheck c;
  c.model = to_string(spec.model);
  c.max_diff = (micromorphic_energy(t, spec, p) - micromorphic_energy(s, spec, p)).max_abs_coeff();
  c.pass = c.max_diff <= tol;
  return c;
}

nlohmann::json to_json(const LimitStudy& s) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : s.rows) {
    nlohmann::json j{{"penalty", r.penalty},   {"violation", r.violation},     {"energy", r.energy},
                     {"residual", r.residual}, {"stress_skew", r.stress_skew}, {"gap", nullptr}};
    if (r.gap) j["gap"] = *r.gap;
    rows.push_back(j);
  }
  nlohmann::json j{{"model", to_string(s.model)},
                   {"rows", rows},
                   {"constrained_energy", nullptr},
                   {"violation_decreasing", s.violation_decreasing},
                   {"energy_increasing", s.energy_increasing},
                   {"bounded_above", s.bounded_above},
                   {"observed_rates", s.observed_rates}};
  if (s.constrained) j["constrained_energy"] = *s.constrained;
  return j;
}

}  // namespace cstress
