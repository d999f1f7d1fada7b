#include "qdirac/suite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace qdirac {

namespace {

double euclid4(const FourVector& v) { return std::sqrt(v.t * v.t + v.x * v.x + v.y * v.y + v.z * v.z); }

bool is_zero3(const Vec3& v) { return v[0] == 0.0 && v[1] == 0.0 && v[2] == 0.0; }

bool along_z(const Vec3& v) { return v[0] == 0.0 && v[1] == 0.0 && v[2] != 0.0; }

/// Expected u^dagger u of each component.
std::array<double, 2> expected_norms(const PlaneWaveSolution& s, NormChoice norm) {
  if (s.mass() > 0.0) return {norm_target(s.k0(), s.mass(), norm), norm_target(s.k1(), s.mass(), norm)};
  return {std::abs(s.k0().t), std::abs(s.k1().t)};
}

struct Checks {
  std::vector<CheckResult>& out;

  void add(std::string name, std::string subject, double measured, double tol, bool informational = false) {
    out.push_back({std::move(name), std::move(subject), measured, tol, measured <= tol, informational});
  }
};

void check_solution(Checks& c, const PlaneWaveSolution& s, NormChoice norm_choice, SpinBasis basis,
                    const std::vector<FourVector>& points, const Tolerances& tol) {
  const std::string& id = s.label();
  c.add("dirac_residual", id, max_residual(s, points) / residual_scale(s), tol.algebraic);
  c.add("dispersion", id, std::max(dispersion_defect(s.k0(), s.mass()), dispersion_defect(s.k1(), s.mass())),
        tol.algebraic);

  const auto target = expected_norms(s, norm_choice);
  c.add("normalization", id,
        std::max(std::abs(norm2(s.u0()) - target[0]) / target[0], std::abs(norm2(s.u1()) - target[1]) / target[1]),
        tol.algebraic);

  double density = 0.0;
  double current0 = 0.0;
  double positivity = 0.0;
  const double scale = target[0] + target[1];
  for (const auto& x : points) {
    const QSpinor4 psi = s.evaluate(x);
    const double th = s.phase(x);
    const double cc = std::cos(th);
    const double ss = std::sin(th);
    const double rho = norm2(psi);
    const double j0 = current_of(psi).t;
    density = std::max(density, std::abs(rho - (cc * cc * target[0] + ss * ss * target[1])) / scale);
    current0 = std::max(current0, std::abs(j0 - rho) / scale);
    positivity = std::max(positivity, std::max(0.0, -j0) / scale);
  }
  c.add("density", id, density, tol.algebraic);
  c.add("current_density", id, current0, tol.algebraic);
  c.add("density_positive", id, positivity, tol.algebraic);

  if (s.mass() > 0.0 && s.tags().e0) {
    const double expected = expected_adjoint_norm(s);
    const double at_origin = adjoint_norm(s);
    c.add("adjoint_norm", id, std::abs(at_origin - expected), tol.algebraic);
    double spread = 0.0;
    for (const auto& x : points) spread = std::max(spread, std::abs(adjoint_norm(s, x) - at_origin));
    c.add("adjoint_spread", id, spread, tol.algebraic);
  }

  if (s.tags().c0 && s.tags().c1) {
    const std::array<const CSpinor4*, 2> us{&s.u0(), &s.u1()};
    const std::array<Chirality, 2> cs{*s.tags().c0, *s.tags().c1};
    double r = 0.0;
    for (std::size_t a = 0; a < 2; ++a) {
      const CSpinor4& u = *us[a];
      r = std::max(r, norm(gamma5() * u - Complex(value(cs[a]), 0.0) * u) / norm(u));
    }
    c.add("chirality", id, r, tol.algebraic);
  }

  const Vec3 k0 = s.k0().spatial();
  const Vec3 k1 = s.k1().spatial();
  const bool helicity_defined = !is_zero3(k0) && !is_zero3(k1) &&
                                (basis == SpinBasis::helicity || s.mass() == 0.0 || (along_z(k0) && along_z(k1)));
  if (helicity_defined) {
    const HelicityReport h = helicity_check(s, tol.algebraic);
    double m = std::max(h.residual[0], h.residual[1]);
    for (double e : h.eigenvalue) m = std::max(m, std::isnan(e) ? 1.0 : std::abs(std::abs(e) - 0.5));
    c.add("helicity", id, m, tol.algebraic);
  }
}

struct FnField {
  std::function<QSpinor4(const FourVector&)> f;
  QSpinor4 evaluate(const FourVector& x) const { return f(x); }
};

double packet_scale(const WavePacket& p) {
  double k = 0.0;
  double u = 0.0;
  for (const auto& t : p.terms()) {
    k = std::max(k, euclid4(t.k));
    u += std::abs(t.amplitude) * norm(t.u);
  }
  return (k + p.mass() + 1.0) * std::max(1.0, u);
}

json check_json(const CheckResult& c) {
  return json{{"name", c.name},         {"subject", c.subject}, {"measured", c.measured},
              {"tolerance", c.tolerance}, {"passed", c.passed},  {"informational", c.informational}};
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed && !c.informational; }));
}

std::vector<PlaneWaveSolution> build_catalog(const SolutionConfig& c) {
  if (c.massless) return enumerate_massless_theta0_set(c.kvec0, c.kvec1, c.theta0);
  return enumerate_massive_set(c.m, c.kvec0, c.kvec1, c.theta0, c.norm_choice, c.spin_basis);
}

namespace {

std::vector<CatalogRecord> catalog_records(const std::vector<PlaneWaveSolution>& set, const RunConfig& cfg) {
  const auto points = certification_points(cfg.sample_points, 10.0, cfg.seed);
  std::vector<CatalogRecord> out;
  for (const auto& s : set) {
    CatalogRecord r{s, max_residual(s, points) / residual_scale(s), norm2(s.evaluate({})), std::nullopt};
    if (s.mass() > 0.0) r.adjoint_norm = adjoint_norm(s);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<CatalogRecord> run_catalog(const RunConfig& cfg) {
  if (!cfg.solution && !cfg.theta_family) throw ConfigError("solution: missing required block");
  std::vector<CatalogRecord> out;
  if (cfg.solution) out = catalog_records(build_catalog(*cfg.solution), cfg);
  if (cfg.theta_family) {
    const MasslessThetaSpec& spec = cfg.theta_family->spec;
    const ConstraintReport cr = check_constraints(
        {spec.theta, spec.kappa0 * spec.theta, spec.kappa1 * spec.theta, cfg.theta_family->m}, cfg.tolerances.algebraic);
    if (!cr.massless) throw ConfigError("theta_family.m: a nonzero theta requires m = 0");
    for (auto& r : catalog_records({build_massless_theta_solution(spec)}, cfg)) out.push_back(std::move(r));
  }
  return out;
}

double expected_gram_entry(const PlaneWaveSolution& a, const PlaneWaveSolution& b, double volume) {
  const SolutionTags& ta = a.tags();
  const SolutionTags& tb = b.tags();
  const bool same0 = ta.s0 == tb.s0 && ta.e0 == tb.e0 && ta.c0 == tb.c0 && a.k0() == b.k0();
  const bool same1 = ta.s1 == tb.s1 && ta.e1 == tb.e1 && ta.c1 == tb.c1 && a.k1() == b.k1();
  const double c = std::cos(a.theta0());
  const double s = std::sin(a.theta0());
  double g = 0.0;
  if (same0) g += c * c * norm2(a.u0());
  if (same1) g += s * s * norm2(a.u1());
  return g * volume;
}

VerifyReport run_verify(const RunConfig& cfg) {
  VerifyReport rep;
  rep.seed = cfg.seed;
  rep.sample_points = cfg.sample_points;
  rep.tolerances = cfg.tolerances;
  Checks c{rep.checks};
  const Tolerances& tol = cfg.tolerances;
  const auto points = certification_points(cfg.sample_points, 10.0, cfg.seed);

  if (!cfg.solution && !cfg.theta_family && !cfg.packet) {
    throw ConfigError("config: verify needs a solution, theta_family or packet block");
  }

  if (cfg.solution) {
    const SolutionConfig& sc = *cfg.solution;
    const auto set = build_catalog(sc);
    c.add("cardinality", "catalog", std::abs(static_cast<double>(set.size()) - (sc.massless ? 4.0 : 8.0)), 0.0);
    const NormChoice norm = sc.massless ? NormChoice::E : sc.norm_choice;
    for (const auto& s : set) check_solution(c, s, norm, sc.spin_basis, points, tol);

    if (cfg.grid) {
      GramReport g = gram_matrix(set, *cfg.grid, tol.quadrature);
      const double volume = time_slice(*cfg.grid, 0).spatial_volume();
      double structure = 0.0;
      double diag = 0.0;
      double scale = 0.0;
      for (std::size_t i = 0; i < g.n; ++i) scale = std::max(scale, std::abs(expected_gram_entry(set[i], set[i], volume)));
      for (std::size_t i = 0; i < g.n; ++i) {
        for (std::size_t j = 0; j < g.n; ++j) {
          const double d = std::abs(g(i, j) - expected_gram_entry(set[i], set[j], volume)) / scale;
          structure = std::max(structure, d);
          if (i == j) diag = std::max(diag, d);
        }
      }
      c.add("gram_structure", "gram", structure, tol.quadrature);
      c.add("gram_diagonal", "gram", diag, tol.quadrature);
      c.add("gram_symmetry", "gram", g.symmetry_defect / scale, tol.quadrature);
      c.add("gram_offdiag_ratio", "gram", g.offdiag_ratio(), tol.quadrature, true);
      rep.gram = std::move(g);
    }
  }

  if (cfg.theta_family) {
    const MasslessThetaSpec& spec = cfg.theta_family->spec;
    const ConstraintQuery q{spec.theta, spec.kappa0 * spec.theta, spec.kappa1 * spec.theta, cfg.theta_family->m};
    const ConstraintReport cr = check_constraints(q, tol.algebraic);
    const double worst = std::max({cr.theta_null_residual, cr.k_dot_theta[0], cr.k_dot_theta[1], cr.dispersion[0],
                                   cr.dispersion[1], cr.proportionality[0], cr.proportionality[1],
                                   cr.massless ? 0.0 : std::abs(cfg.theta_family->m)});
    c.out.push_back({"theta_constraints", "theta_family", worst, tol.algebraic, cr.accepted, false});
    if (cr.accepted) {
      const PlaneWaveSolution s = build_massless_theta_solution(spec);
      check_solution(c, s, NormChoice::E, SpinBasis::z, points, tol);
      const CMatrix4 ts = slashed(spec.theta);
      const double r = std::max(norm(ts * s.u0()) / norm(s.u0()), norm(ts * s.u1()) / norm(s.u1()));
      c.add("theta_null_space", s.label(), r / std::max(1.0, euclid4(spec.theta)), tol.algebraic);
    }
  }

  if (cfg.packet) {
    const WavePacket p = build_wave_packet(*cfg.packet);
    c.add("dirac_residual", "packet", max_residual(p, points) / packet_scale(p), tol.algebraic);
  }
  return rep;
}

double fitted_order(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fitted_order: need two or more matching points");
  double sx = 0.0;
  double sy = 0.0;
  double sxx = 0.0;
  double sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ContinuityStudy run_continuity(const RunConfig& cfg) {
  if (!cfg.grid) throw ConfigError("grid: missing required block");
  if (cfg.continuity.levels < 3) throw ConfigError("continuity.levels: need at least 3 refinement levels");

  ContinuityStudy st;
  st.field = cfg.continuity.field;
  if (st.field.empty()) st.field = cfg.packet ? "packet" : cfg.theta_family ? "theta" : "solution";

  FnField field;
  if (st.field == "packet") {
    if (!cfg.packet) throw ConfigError("packet: missing required block");
    field.f = [p = build_wave_packet(*cfg.packet)](const FourVector& x) { return p.evaluate(x); };
  } else if (st.field == "theta") {
    if (!cfg.theta_family) throw ConfigError("theta_family: missing required block");
    field.f = [s = build_massless_theta_solution(cfg.theta_family->spec)](const FourVector& x) { return s.evaluate(x); };
  } else {
    if (!cfg.solution) throw ConfigError("solution: missing required block");
    field.f = [s = build_catalog(*cfg.solution).front()](const FourVector& x) { return s.evaluate(x); };
  }

  st.source_free = std::all_of(cfg.continuity.b.begin(), cfg.continuity.b.end(),
                               [](const Complex& z) { return z == Complex{}; });
  SpacetimeGrid g = *cfg.grid;
  try {
    g.validate();
    for (std::size_t l = 0; l < cfg.continuity.levels; ++l) {
      st.levels.push_back({g.spacing[0], continuity_residual(field, g, cfg.continuity.b)});
      g = g.refined();
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }

  std::vector<double> h;
  std::vector<double> d;
  for (const auto& l : st.levels) {
    h.push_back(l.h);
    d.push_back(l.report.defect);
  }
  st.order = fitted_order(h, d);
  const bool at_rounding = st.levels.back().report.defect <= cfg.tolerances.quadrature;
  st.converged = at_rounding || (st.order >= 1.8 && st.order <= 2.2);
  return st;
}

std::vector<PacketRow> run_packet(const RunConfig& cfg) {
  if (!cfg.packet) throw ConfigError("packet: missing required block");
  if (!cfg.grid) throw ConfigError("grid: missing required block");
  const WavePacket p = build_wave_packet(*cfg.packet);
  try {
    cfg.grid->validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("grid: ") + e.what());
  }
  const auto density = sample([&](const FourVector& x) { return current_of(p.evaluate(x)).t; }, *cfg.grid);
  const SpacetimeGrid& g = density.grid;
  std::vector<double> norms(g.counts[0]);
  for (std::size_t it = 0; it < g.counts[0]; ++it) norms[it] = integrate_spatial(density, it);

  std::vector<PacketRow> rows;
  rows.reserve(g.size());
  for (std::size_t n = 0; n < g.size(); ++n) rows.push_back({g.point(n), density.values[n], norms[g.unravel(n)[0]]});
  return rows;
}

json to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(check_json(c));
  json j{{"command", "verify"},
         {"seed", r.seed},
         {"sample_points", r.sample_points},
         {"tolerances", {{"algebraic", r.tolerances.algebraic}, {"quadrature", r.tolerances.quadrature}}},
         {"passed", r.passed()},
         {"failures", r.failures()},
         {"checks", std::move(checks)}};
  if (r.gram) j["gram"] = to_json(*r.gram);
  return j;
}

json to_json(const ContinuityStudy& s) {
  json levels = json::array();
  for (const auto& l : s.levels) {
    json lj = to_json(l.report);
    lj["h"] = l.h;
    levels.push_back(std::move(lj));
  }
  json j{{"command", "continuity"}, {"field", s.field},         {"source_free", s.source_free},
         {"order", s.order},        {"converged", s.converged}, {"levels", std::move(levels)}};
  return j;
}

}  // namespace qdirac
