#pragma once

// Rectangular spacetime lattice, second-order central differences and
// Riemann-sum quadrature over spatial slices.

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qdirac/spinor.hpp"

namespace qdirac {

struct SpacetimeGrid {
  FourVector origin;
  std::array<double, 4> spacing{1.0, 1.0, 1.0, 1.0};
  std::array<std::size_t, 4> counts{1, 1, 1, 1};
  std::array<bool, 4> periodic{false, false, false, false};

  /// Throws std::invalid_argument for non-positive spacing or a zero count.
  void validate() const;

  std::size_t size() const { return counts[0] * counts[1] * counts[2] * counts[3]; }
  std::size_t spatial_size() const { return counts[1] * counts[2] * counts[3]; }

  /// Row-major index, z fastest.
  std::size_t index(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) const {
    return ((it * counts[1] + ix) * counts[2] + iy) * counts[3] + iz;
  }
  std::array<std::size_t, 4> unravel(std::size_t flat) const;
  FourVector point(std::size_t flat) const;

  double cell_volume() const { return spacing[1] * spacing[2] * spacing[3]; }
  /// Length covered along an axis: n h when periodic, (n - 1) h otherwise.
  double extent(std::size_t axis) const;
  double spatial_volume() const { return extent(1) * extent(2) * extent(3); }

  /// Halves every spacing on axes with count >= 3, keeping the covered extent.
  SpacetimeGrid refined() const;
};

template <class T>
struct GridArray {
  SpacetimeGrid grid;
  std::vector<T> values;

  const T& at(std::size_t it, std::size_t ix, std::size_t iy, std::size_t iz) const {
    return values[grid.index(it, ix, iy, iz)];
  }
};

/// Derivative values plus the points where the stencil was defined.
template <class T>
struct DiffArray {
  GridArray<T> array;
  std::vector<bool> defined;
};

/// Evaluates a field at every lattice point in row-major order.
template <class F>
auto sample(const F& field, const SpacetimeGrid& grid) {
  grid.validate();
  using T = decltype(field(FourVector{}));
  GridArray<T> out{grid, {}};
  out.values.reserve(grid.size());
  for (std::size_t n = 0; n < grid.size(); ++n) out.values.push_back(field(grid.point(n)));
  return out;
}

/// (f(+1) - f(-1)) / 2h along axis; wraps on periodic axes, otherwise drops the
/// two boundary planes. Throws std::invalid_argument with fewer than 3 points.
template <class T>
DiffArray<T> central_diff(const GridArray<T>& f, std::size_t axis) {
  const SpacetimeGrid& g = f.grid;
  if (axis > 3) throw std::out_of_range("central_diff: axis must be 0..3");
  const std::size_t n = g.counts[axis];
  if (n < 3) throw std::invalid_argument("central_diff: need at least 3 points on the axis");
  const double inv2h = 1.0 / (2.0 * g.spacing[axis]);

  DiffArray<T> out{{g, std::vector<T>(g.size(), T{})}, std::vector<bool>(g.size(), false)};
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    auto idx = g.unravel(flat);
    const std::size_t i = idx[axis];
    std::size_t lo;
    std::size_t hi;
    if (g.periodic[axis]) {
      lo = (i + n - 1) % n;
      hi = (i + 1) % n;
    } else {
      if (i == 0 || i + 1 == n) continue;
      lo = i - 1;
      hi = i + 1;
    }
    auto up = idx;
    auto dn = idx;
    up[axis] = hi;
    dn[axis] = lo;
    out.array.values[flat] = inv2h * (f.values[g.index(up[0], up[1], up[2], up[3])] -
                                      f.values[g.index(dn[0], dn[1], dn[2], dn[3])]);
    out.defined[flat] = true;
  }
  return out;
}

/// Quadrature weight of a spatial point: periodic axes and single-point axes
/// weight h, non-periodic axes use trapezoid end weights h / 2.
double spatial_weight(const SpacetimeGrid& grid, std::size_t ix, std::size_t iy, std::size_t iz);

/// Sum of f over the spatial slice it, times the quadrature weights.
template <class T>
T integrate_spatial(const GridArray<T>& f, std::size_t it) {
  const SpacetimeGrid& g = f.grid;
  if (it >= g.counts[0]) throw std::out_of_range("integrate_spatial: time index out of range");
  T acc{};
  for (std::size_t ix = 0; ix < g.counts[1]; ++ix)
    for (std::size_t iy = 0; iy < g.counts[2]; ++iy)
      for (std::size_t iz = 0; iz < g.counts[3]; ++iz)
        acc += spatial_weight(g, ix, iy, iz) * f.at(it, ix, iy, iz);
  return acc;
}

}  // namespace qdirac
