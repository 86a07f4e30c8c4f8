#include "kyfan/grid.hpp"

#include <cmath>

#include <fmt/format.h>

#include "kyfan/errors.hpp"

namespace kyfan {

double linspace_at(double lo, double hi, std::size_t n, std::size_t i) {
  if (n <= 1 || i == 0) return lo;
  if (i + 1 == n) return hi;
  return lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(n - 1));
}

double GridSpec::x(std::size_t ix) const { return linspace_at(x_min, x_max, nx, ix); }
double GridSpec::y(std::size_t iy) const { return linspace_at(y_min, y_max, ny, iy); }

void GridSpec::validate() const {
  const bool finite = std::isfinite(x_min) && std::isfinite(x_max) && std::isfinite(y_min) &&
                      std::isfinite(y_max);
  if (!finite || !(x_min > 0.0) || !(y_min > 0.0) || x_min > x_max || y_min > y_max) {
    throw DomainError(fmt::format("invalid grid bounds [{}, {}] x [{}, {}]", x_min, x_max, y_min,
                                  y_max));
  }
  if (nx < 2 || ny < 2) throw DomainError(fmt::format("grid counts must be >= 2, got {}x{}", nx, ny));
}

void GridSpec::validate_kyfan() const {
  validate();
  if (x_max > 0.5 || y_max > 0.5)
    throw DomainError(fmt::format("Ky Fan grids live in (0, 1/2]^2, got x_max={} y_max={}", x_max,
                                  y_max));
}

double Interval::at(std::size_t i) const { return linspace_at(lo, hi, n, i); }

void Interval::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi)
    throw DomainError(fmt::format("invalid interval [{}, {}]", lo, hi));
  if (n < 2) throw DomainError(fmt::format("interval point count must be >= 2, got {}", n));
}

void Interval::validate_unit() const {
  validate();
  if (!(lo > 0.0) || !(hi < 1.0))
    throw DomainError(fmt::format("interval [{}, {}] must lie inside (0, 1)", lo, hi));
}

GridSpec default_kyfan_grid() { return GridSpec{}; }
Interval default_unit_interval() { return Interval{}; }
Interval default_g_interval() { return Interval{1.0 + 1e-4, 100.0, 4000}; }

}  // namespace kyfan
