#pragma once

// Quantitative checks on constructed solutions: Dirac residuals, the
// probability four-current and its continuity equation, the real inner
// product, Gram matrices, adjoint norms and helicity.

#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "qdirac/grid.hpp"
#include "qdirac/solutions.hpp"

namespace qdirac {

struct Tolerances {
  double algebraic = 1e-12;
  double quadrature = 1e-10;
};

/// Sup over points of |gamma^mu((d_mu - a_mu i) Psi) i - m Psi|.
template <SpinorField F>
double dirac_residual(const F& field, const FourVector& a, const std::vector<FourVector>& points) {
  return max_residual(field, points, a);
}

/// J^mu = Re(Psi-bar gamma^mu Psi).
FourVector current_of(const QSpinor4& psi);

template <class F>
FourVector current(const F& field, const FourVector& x) {
  return current_of(field.evaluate(x));
}

/// Re(Psi-bar Psi).
double adjoint_density(const QSpinor4& psi);

/// Re(Psi-bar b_l (gamma^l - gamma^l*) j Psi) summed over l = 1..3; b holds b_0..b_3.
double continuity_source(const QSpinor4& psi, const std::array<Complex, 4>& b);

struct ContinuityReport {
  SpacetimeGrid grid;
  double lhs_norm = 0.0;  // max |d_mu J^mu| over interior points
  double rhs_norm = 0.0;  // max |source|
  double defect = 0.0;    // max |lhs - rhs|
  std::size_t interior_points = 0;
};

/// Central-difference continuity check on sampled values. The time axis needs
/// >= 3 points; spatial axes need 1 (not differentiated) or >= 3.
/// Throws std::invalid_argument on a degenerate grid.
ContinuityReport continuity_residual_sampled(const GridArray<QSpinor4>& psi, const std::array<Complex, 4>& b);

template <class F>
ContinuityReport continuity_residual(const F& field, const SpacetimeGrid& grid,
                                     const std::array<Complex, 4>& b = {}) {
  return continuity_residual_sampled(sample([&](const FourVector& x) { return field.evaluate(x); }, grid), b);
}

/// Grid restricted to time index it.
SpacetimeGrid time_slice(const SpacetimeGrid& grid, std::size_t it);

/// 1/2 sum (Phi Psi* + Phi* Psi) over components and the spatial slice, times weights.
double inner_product_sampled(const GridArray<QSpinor4>& psi, const GridArray<QSpinor4>& phi);

template <class F, class G>
double inner_product_grid(const F& psi, const G& phi, const SpacetimeGrid& grid, std::size_t it = 0) {
  const SpacetimeGrid slice = time_slice(grid, it);
  return inner_product_sampled(sample([&](const FourVector& x) { return psi.evaluate(x); }, slice),
                               sample([&](const FourVector& x) { return phi.evaluate(x); }, slice));
}

struct GramReport {
  std::vector<std::string> labels;
  std::size_t n = 0;
  std::vector<double> matrix;  // row-major n x n
  double tolerance = 1e-10;
  double max_offdiag = 0.0;
  double min_diag = 0.0;
  double symmetry_defect = 0.0;

  double operator()(std::size_t r, std::size_t c) const { return matrix[r * n + c]; }
  /// max_offdiag / min_diag.
  double offdiag_ratio() const { return min_diag > 0.0 ? max_offdiag / min_diag : std::numeric_limits<double>::infinity(); }
};

/// Pairwise real inner products on the first time slice of the grid.
GramReport gram_matrix(const std::vector<PlaneWaveSolution>& set, const SpacetimeGrid& grid,
                       double tolerance = 1e-10);

/// Copy of sol with each component rescaled to u^dagger u = |k0| / m, so that
/// u-bar u = +/-1.
PlaneWaveSolution covariant_rescaled(const PlaneWaveSolution& sol);

/// Re(Psi-bar Psi) of the covariantly rescaled solution. Requires m > 0.
double adjoint_norm(const PlaneWaveSolution& sol, const FourVector& x = {});

/// Expected adjoint norm: +cos 2 Theta0 for (+-) labels, -cos 2 Theta0 for (-+).
double expected_adjoint_norm(const PlaneWaveSolution& sol);

struct HelicityReport {
  std::array<double, 2> eigenvalue{std::numeric_limits<double>::quiet_NaN(),
                                   std::numeric_limits<double>::quiet_NaN()};
  std::array<double, 2> residual{};
  bool ok() const { return !std::isnan(eigenvalue[0]) && !std::isnan(eigenvalue[1]); }
};

/// Rayleigh quotient of helicity_matrix(kvec_alpha) on each u_alpha; a slot is
/// NaN when |H u - h u| > tol |u|. Throws std::invalid_argument on zero momenta.
HelicityReport helicity_check(const PlaneWaveSolution& sol, double tol = 1e-12);

}  // namespace qdirac
