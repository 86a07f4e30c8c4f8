#pragma once

#include <cstddef>

namespace kyfan {

/// Uniform rectangular sampling plan over [x_min, x_max] x [y_min, y_max].
/// Points are visited row-major: index = ix * ny + iy.
struct GridSpec {
  double x_min = 1e-3;
  double x_max = 0.5;
  double y_min = 1e-3;
  double y_max = 0.5;
  std::size_t nx = 400;
  std::size_t ny = 400;
  bool exclude_diagonal = false;

  double x(std::size_t ix) const;
  double y(std::size_t iy) const;
  std::size_t size() const { return nx * ny; }

  /// Throws DomainError on unordered bounds, non-positive bounds or counts < 2.
  void validate() const;
  /// validate() plus x_max, y_max <= 1/2.
  void validate_kyfan() const;

  bool operator==(const GridSpec&) const = default;
};

/// Uniform 1-D sampling plan of n points over [lo, hi].
struct Interval {
  double lo = 1e-4;
  double hi = 1.0 - 1e-4;
  std::size_t n = 4000;

  double at(std::size_t i) const;
  void validate() const;
  /// validate() plus 0 < lo and hi < 1.
  void validate_unit() const;

  bool operator==(const Interval&) const = default;
};

GridSpec default_kyfan_grid();
Interval default_unit_interval();
/// Grid for the harmonic corollary's g(s), s in (1, 100].
Interval default_g_interval();

/// Point i of n evenly spaced points over [lo, hi]; exact at both ends.
double linspace_at(double lo, double hi, std::size_t n, std::size_t i);

}  // namespace kyfan
