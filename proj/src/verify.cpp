#include "qdirac/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace qdirac {

FourVector current_of(const QSpinor4& psi) {
  const QRow4 bar = adjoint(psi);
  std::array<double, 4> j{};
  for (std::size_t mu = 0; mu < 4; ++mu) j[mu] = contract(bar, apply_left(gamma(mu), psi)).w();
  return {j[0], j[1], j[2], j[3]};
}

double adjoint_density(const QSpinor4& psi) { return contract(adjoint(psi), psi).w(); }

double continuity_source(const QSpinor4& psi, const std::array<Complex, 4>& b) {
  const QSpinor4 jpsi = left_mul_j_spinor(psi);
  CMatrix4 m;
  for (std::size_t l = 1; l <= 3; ++l) {
    if (b[l] == Complex{}) continue;
    m = m + b[l] * (gamma(l) - gamma(l).conj());
  }
  return contract(adjoint(psi), apply_left(m, jpsi)).w();
}

ContinuityReport continuity_residual_sampled(const GridArray<QSpinor4>& psi, const std::array<Complex, 4>& b) {
  const SpacetimeGrid& g = psi.grid;
  g.validate();
  if (g.counts[0] < 3) throw std::invalid_argument("continuity: the time axis needs at least 3 points");
  for (std::size_t a = 1; a < 4; ++a) {
    if (g.counts[a] == 2) throw std::invalid_argument("continuity: spatial axes need 1 or at least 3 points");
  }

  GridArray<FourVector> current{g, {}};
  current.values.reserve(g.size());
  for (const auto& v : psi.values) current.values.push_back(current_of(v));

  std::vector<double> divergence(g.size(), 0.0);
  std::vector<bool> interior(g.size(), true);
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (g.counts[mu] < 3) continue;
    const DiffArray<FourVector> d = central_diff(current, mu);
    for (std::size_t n = 0; n < g.size(); ++n) {
      divergence[n] += d.array.values[n][mu];
      interior[n] = interior[n] && d.defined[n];
    }
  }

  ContinuityReport report;
  report.grid = g;
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (!interior[n]) continue;
    const double rhs = continuity_source(psi.values[n], b);
    report.lhs_norm = std::max(report.lhs_norm, std::abs(divergence[n]));
    report.rhs_norm = std::max(report.rhs_norm, std::abs(rhs));
    report.defect = std::max(report.defect, std::abs(divergence[n] - rhs));
    ++report.interior_points;
  }
  if (report.interior_points == 0) throw std::invalid_argument("continuity: grid has no interior points");
  return report;
}

SpacetimeGrid time_slice(const SpacetimeGrid& grid, std::size_t it) {
  if (it >= grid.counts[0]) throw std::out_of_range("time_slice: index out of range");
  SpacetimeGrid s = grid;
  s.origin.t = grid.origin.t + static_cast<double>(it) * grid.spacing[0];
  s.counts[0] = 1;
  return s;
}

double inner_product_sampled(const GridArray<QSpinor4>& psi, const GridArray<QSpinor4>& phi) {
  if (psi.grid.counts != phi.grid.counts) throw std::invalid_argument("inner product: grids differ");
  const SpacetimeGrid& g = psi.grid;
  double acc = 0.0;
  for (std::size_t ix = 0; ix < g.counts[1]; ++ix) {
    for (std::size_t iy = 0; iy < g.counts[2]; ++iy) {
      for (std::size_t iz = 0; iz < g.counts[3]; ++iz) {
        const QSpinor4& a = psi.at(0, ix, iy, iz);
        const QSpinor4& b = phi.at(0, ix, iy, iz);
        double dot = 0.0;
        for (std::size_t c = 0; c < 4; ++c) dot += real_inner_pointwise(b[c], a[c]);
        acc += spatial_weight(g, ix, iy, iz) * dot;
      }
    }
  }
  return acc;
}

GramReport gram_matrix(const std::vector<PlaneWaveSolution>& set, const SpacetimeGrid& grid, double tolerance) {
  const SpacetimeGrid slice = time_slice(grid, 0);
  std::vector<GridArray<QSpinor4>> samples;
  samples.reserve(set.size());
  for (const auto& s : set) samples.push_back(sample([&](const FourVector& x) { return s.evaluate(x); }, slice));

  GramReport r;
  r.n = set.size();
  r.tolerance = tolerance;
  r.matrix.assign(r.n * r.n, 0.0);
  for (const auto& s : set) r.labels.push_back(s.label());
  for (std::size_t i = 0; i < r.n; ++i)
    for (std::size_t j = 0; j < r.n; ++j) r.matrix[i * r.n + j] = inner_product_sampled(samples[i], samples[j]);

  r.min_diag = r.n > 0 ? std::numeric_limits<double>::infinity() : 0.0;
  for (std::size_t i = 0; i < r.n; ++i) {
    r.min_diag = std::min(r.min_diag, r(i, i));
    for (std::size_t j = 0; j < r.n; ++j) {
      if (i != j) r.max_offdiag = std::max(r.max_offdiag, std::abs(r(i, j)));
      r.symmetry_defect = std::max(r.symmetry_defect, std::abs(r(i, j) - r(j, i)));
    }
  }
  return r;
}

PlaneWaveSolution covariant_rescaled(const PlaneWaveSolution& sol) {
  const double m = sol.mass();
  if (!(m > 0.0)) throw std::invalid_argument("covariant_rescaled: needs m > 0");
  auto rescale = [m](const CSpinor4& u, const FourVector& k) {
    return Complex(std::sqrt((std::abs(k.t) / m) / norm2(u)), 0.0) * u;
  };
  return sol.with_spinors(rescale(sol.u0(), sol.k0()), rescale(sol.u1(), sol.k1()));
}

double adjoint_norm(const PlaneWaveSolution& sol, const FourVector& x) {
  return adjoint_density(covariant_rescaled(sol).evaluate(x));
}

double expected_adjoint_norm(const PlaneWaveSolution& sol) {
  if (!sol.tags().e0) throw std::invalid_argument("expected_adjoint_norm: solution carries no energy labels");
  if (!(sol.mass() > 0.0)) throw std::invalid_argument("expected_adjoint_norm: requires m > 0");
  return value(*sol.tags().e0) * std::cos(2.0 * sol.theta0());
}

HelicityReport helicity_check(const PlaneWaveSolution& sol, double tol) {
  HelicityReport r;
  const std::array<const CSpinor4*, 2> us{&sol.u0(), &sol.u1()};
  const std::array<Vec3, 2> ks{sol.k0().spatial(), sol.k1().spatial()};
  for (std::size_t a = 0; a < 2; ++a) {
    const CMatrix4 h = helicity_matrix(ks[a]);
    const CSpinor4& u = *us[a];
    const CSpinor4 hu = h * u;
    const double lambda = inner(u, hu).real() / norm2(u);
    r.residual[a] = norm(hu - Complex(lambda, 0.0) * u) / norm(u);
    if (r.residual[a] <= tol) r.eigenvalue[a] = lambda;
  }
  return r;
}

}  // namespace qdirac
