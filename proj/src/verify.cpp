#include "kyfan/verify.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "kyfan/errors.hpp"
#include "scan_report.hpp"

namespace kyfan {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

kernels::Acceptance non_strict(const CheckOptions& opts) { return {opts.tol, false}; }

// Pairwise comparison of consecutive tabulated values. With `increasing` the
// margin is v[i+1] - v[i], otherwise v[i] - v[i+1].
CheckReport pairwise_monotone(const std::function<double(double)>& f, bool increasing,
                              const Interval& grid, const CheckOptions& opts,
                              std::string relation, std::vector<std::string> subjects) {
  const std::vector<double> values =
      detail::run_tabulate(opts.execution, grid.n, [&](std::size_t i) { return f(grid.at(i)); });
  const auto margin = [&](std::size_t i) {
    return increasing ? values[i + 1] - values[i] : values[i] - values[i + 1];
  };
  const auto scan = detail::run_scan(opts.execution, grid.n - 1, margin, non_strict(opts));
  return detail::make_report(scan, std::move(relation), std::move(subjects), grid, opts.tol,
                             [&](std::size_t i) {
                               return std::vector<double>{grid.at(i), grid.at(i + 1)};
                             });
}

}  // namespace

double prime_of(const MeanDescriptor& mean, double x, double y) {
  if (!(x > 0.0 && x <= 0.5 && y > 0.0 && y <= 0.5))
    throw DomainError(fmt::format("prime_of needs 0 < x, y <= 1/2, got ({}, {})", x, y));
  return mean(1.0 - x, 1.0 - y);
}

std::string_view to_string(Relation relation) {
  return relation == Relation::Ratio ? "ratio" : "harmonic";
}

KyFanSample kyfan_sample(Relation relation, const MeanDescriptor& m, const MeanDescriptor& n,
                         double x, double y) {
  const double mv = m(x, y), mp = prime_of(m, x, y);
  const double nv = n(x, y), np = prime_of(n, x, y);
  if (relation == Relation::Ratio) return {x, y, mv / mp, nv / np};
  return {x, y, 1.0 / mv - 1.0 / mp, 1.0 / nv - 1.0 / np};
}

CheckReport check_kyfan(Relation relation, const MeanDescriptor& m, const MeanDescriptor& n,
                        const GridSpec& grid, const CheckOptions& opts) {
  grid.validate_kyfan();
  // Flat row-major indices of the sampled points.
  std::vector<std::size_t> points;
  if (grid.exclude_diagonal) {
    points.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      if (grid.x(i / grid.ny) != grid.y(i % grid.ny)) points.push_back(i);
  }
  const auto flat = [&](std::size_t k) { return grid.exclude_diagonal ? points[k] : k; };
  const std::size_t count = grid.exclude_diagonal ? points.size() : grid.size();
  const auto coords = [&](std::size_t k) {
    const std::size_t i = flat(k);
    return std::vector<double>{grid.x(i / grid.ny), grid.y(i % grid.ny)};
  };
  const auto margin = [&](std::size_t k) {
    const std::size_t i = flat(k);
    return kyfan_sample(relation, m, n, grid.x(i / grid.ny), grid.y(i % grid.ny)).margin();
  };
  const auto scan = detail::run_scan(opts.execution, count, margin, non_strict(opts));
  const std::string rel =
      relation == Relation::Ratio
          ? fmt::format("{0}/{0}' <= {1}/{1}'", m.id, n.id)
          : fmt::format("1/{0} - 1/{0}' <= 1/{1} - 1/{1}'", m.id, n.id);
  return detail::make_report(scan, rel, {m.id, n.id}, grid, opts.tol, coords);
}

CheckReport check_ratio_kyfan(const MeanDescriptor& m, const MeanDescriptor& n,
                              const GridSpec& grid, const CheckOptions& opts) {
  return check_kyfan(Relation::Ratio, m, n, grid, opts);
}

CheckReport check_harmonic_kyfan(const MeanDescriptor& m, const MeanDescriptor& n,
                                 const GridSpec& grid, const CheckOptions& opts) {
  return check_kyfan(Relation::Harmonic, m, n, grid, opts);
}

CheckReport check_ratio_monotone(const SeiffertDescriptor& m, const SeiffertDescriptor& n,
                                 const Interval& grid, const CheckOptions& opts) {
  grid.validate_unit();
  return pairwise_monotone([&](double z) { return n(z) / m(z); }, false, grid, opts,
                           fmt::format("{}/{} non-increasing on (0,1)", n.id, m.id),
                           {m.id, n.id});
}

CheckReport check_q_increasing(const MeanDescriptor& m, const MeanDescriptor& n,
                               const Interval& grid, const CheckOptions& opts) {
  grid.validate_unit();
  return pairwise_monotone([&](double t) { return m(1.0, t) / n(1.0, t); }, true, grid, opts,
                           fmt::format("{}(1,t)/{}(1,t) non-decreasing on (0,1)", m.id, n.id),
                           {m.id, n.id});
}

CheckReport check_diff_decreasing(const SeiffertDescriptor& m, const SeiffertDescriptor& n,
                                  const Interval& grid, const CheckOptions& opts) {
  grid.validate_unit();
  return pairwise_monotone([&](double z) { return m(z) - n(z); }, false, grid, opts,
                           fmt::format("{} - {} non-increasing on (0,1)", m.id, n.id),
                           {m.id, n.id});
}

CheckReport check_g_decreasing(const MeanDescriptor& m, const MeanDescriptor& n,
                               const Interval& grid, const CheckOptions& opts) {
  grid.validate();
  if (!(grid.lo > 1.0)) throw DomainError(fmt::format("g(s) needs s > 1, got lo = {}", grid.lo));
  const auto g = [&](double s) { return (s - 1.0) * (1.0 / m(s, 1.0) - 1.0 / n(s, 1.0)); };
  return pairwise_monotone(
      g, false, grid, opts,
      fmt::format("(s-1)(1/{}(s,1) - 1/{}(s,1)) non-increasing for s > 1", m.id, n.id),
      {m.id, n.id});
}

CheckReport check_monotone(const std::function<double(double)>& f, bool increasing,
                           const Interval& grid, const CheckOptions& opts) {
  grid.validate();
  return pairwise_monotone(f, increasing, grid, opts,
                           increasing ? "f non-decreasing" : "f non-increasing", {"f"});
}

CheckReport check_derivative_sign(const std::function<double(double)>& f, const Interval& grid,
                                  Sign expected, const CheckOptions& opts) {
  grid.validate();
  const double sign = expected == Sign::Positive ? 1.0 : -1.0;
  const auto margin = [&](std::size_t i) {
    const double z = grid.at(i);
    const double slope = (f(z + kDerivativeStep) - f(z - kDerivativeStep)) / (2.0 * kDerivativeStep);
    if (!(std::abs(slope) > kDerivativeFloor)) return kNaN;
    return sign * slope;
  };
  const auto scan = detail::run_scan(opts.execution, grid.n, margin, non_strict(opts));
  return detail::make_report(scan, expected == Sign::Positive ? "f' > 0" : "f' < 0", {"f"}, grid,
                             opts.tol, [&](std::size_t i) { return std::vector<double>{grid.at(i)}; });
}

}  // namespace kyfan
