#include "qdirac/grid.hpp"

#include <cmath>

namespace qdirac {

void SpacetimeGrid::validate() const {
  for (std::size_t a = 0; a < 4; ++a) {
    if (!std::isfinite(spacing[a]) || !(spacing[a] > 0.0)) {
      throw std::invalid_argument("grid: spacing must be positive on every axis");
    }
    if (counts[a] == 0) throw std::invalid_argument("grid: counts must be >= 1");
  }
  if (!std::isfinite(origin.t) || !std::isfinite(origin.x) || !std::isfinite(origin.y) ||
      !std::isfinite(origin.z)) {
    throw std::invalid_argument("grid: non-finite origin");
  }
}

std::array<std::size_t, 4> SpacetimeGrid::unravel(std::size_t flat) const {
  std::array<std::size_t, 4> idx{};
  for (std::size_t a = 4; a-- > 0;) {
    idx[a] = flat % counts[a];
    flat /= counts[a];
  }
  return idx;
}

FourVector SpacetimeGrid::point(std::size_t flat) const {
  const auto idx = unravel(flat);
  return {origin.t + static_cast<double>(idx[0]) * spacing[0], origin.x + static_cast<double>(idx[1]) * spacing[1],
          origin.y + static_cast<double>(idx[2]) * spacing[2], origin.z + static_cast<double>(idx[3]) * spacing[3]};
}

double SpacetimeGrid::extent(std::size_t axis) const {
  const auto n = static_cast<double>(counts[axis]);
  if (counts[axis] == 1) return spacing[axis];
  return periodic[axis] ? n * spacing[axis] : (n - 1.0) * spacing[axis];
}

SpacetimeGrid SpacetimeGrid::refined() const {
  SpacetimeGrid g = *this;
  for (std::size_t a = 0; a < 4; ++a) {
    if (counts[a] < 3) continue;
    g.spacing[a] = 0.5 * spacing[a];
    g.counts[a] = periodic[a] ? 2 * counts[a] : 2 * counts[a] - 1;
  }
  return g;
}

double spatial_weight(const SpacetimeGrid& grid, std::size_t ix, std::size_t iy, std::size_t iz) {
  const std::array<std::size_t, 3> idx{ix, iy, iz};
  double w = 1.0;
  for (std::size_t a = 1; a < 4; ++a) {
    const std::size_t i = idx[a - 1];
    double wa = grid.spacing[a];
    if (!grid.periodic[a] && grid.counts[a] > 1 && (i == 0 || i + 1 == grid.counts[a])) wa *= 0.5;
    w *= wa;
  }
  return w;
}

}  // namespace qdirac
