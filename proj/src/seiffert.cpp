#include "kyfan/seiffert.hpp"

#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "kyfan/errors.hpp"
#include "kyfan/verify.hpp"
#include "scan_report.hpp"

namespace kyfan {

std::string_view to_string(SeiffertOrigin origin) {
  return origin == SeiffertOrigin::Builtin ? "builtin" : "extracted-from-mean";
}

double SeiffertDescriptor::operator()(double z) const {
  if (!(z > 0.0 && z < 1.0))
    throw DomainError(fmt::format("Seiffert function '{}' is defined on (0,1), got {}", id, z));
  return core(z);
}

double artanh(double z) { return 0.5 * std::log1p(2.0 * z / (1.0 - z)); }

namespace {

SeiffertDescriptor builtin(std::string id, std::function<double(double)> f) {
  return SeiffertDescriptor{std::move(id), SeiffertOrigin::Builtin, std::move(f)};
}

}  // namespace

SeiffertDescriptor make_power_seiffert(double r, std::string id) {
  if (!std::isfinite(r)) throw DomainError("power mean order must be finite");
  if (id.empty()) id = fmt::format("a({})", r);
  return builtin(std::move(id), [r](double z) { return z / power_mean(r, 1.0 + z, 1.0 - z); });
}

const std::vector<SeiffertDescriptor>& builtin_seiffert() {
  static const std::vector<SeiffertDescriptor> functions = {
      builtin("id", [](double z) { return z; }),
      builtin("sin", [](double z) { return std::sin(z); }),
      builtin("sinh", [](double z) { return std::sinh(z); }),
      builtin("tan", [](double z) { return std::tan(z); }),
      builtin("tanh", [](double z) { return std::tanh(z); }),
      builtin("arcsin", [](double z) { return std::asin(z); }),
      builtin("arctan", [](double z) { return std::atan(z); }),
      builtin("arsinh", [](double z) { return std::asinh(z); }),
      builtin("artanh", [](double z) { return artanh(z); }),
      builtin("q", [](double z) { return z / std::sqrt(1.0 + z * z); }),
  };
  return functions;
}

SeiffertDescriptor find_seiffert(std::string_view id) {
  for (const auto& f : builtin_seiffert())
    if (f.id == id) return f;
  if (id.starts_with("a(") && id.ends_with(")")) {
    if (const auto r = parse_order(id.substr(2, id.size() - 3)))
      return make_power_seiffert(*r, std::string(id));
  }
  throw RegistryError("unknown Seiffert function '" + std::string(id) + "'");
}

SeiffertDescriptor resolve_seiffert(std::string_view id) {
  try {
    return find_seiffert(id);
  } catch (const RegistryError&) {
    return mean_to_seiffert(find_mean(id));
  }
}

SeiffertDescriptor mean_to_seiffert(const MeanDescriptor& mean) {
  return SeiffertDescriptor{mean.id, SeiffertOrigin::ExtractedFromMean,
                            [mean](double z) { return z / mean(1.0 + z, 1.0 - z); }};
}

MeanDescriptor seiffert_to_mean(const SeiffertDescriptor& m) {
  return make_mean("S[" + m.id + "]", "mean generated by " + m.id, MeanKind::SeiffertGenerated,
                   [m](double lo, double hi) {
                     const double z = (hi - lo) / (hi + lo);
                     if (z < kDiagonalCutoff) return 0.5 * (lo + hi);
                     return (hi - lo) / (2.0 * m(z));
                   });
}

CheckReport validate_seiffert(const SeiffertDescriptor& m, const Interval& grid, double tol) {
  grid.validate_unit();
  const auto margin = [&](std::size_t i) {
    const double z = grid.at(i);
    const double v = m(z);
    return std::min(v - z / (1.0 + z), z / (1.0 - z) - v);
  };
  const auto scan = kernels::scan_parallel(grid.n, margin, kernels::Acceptance{tol, false});
  return detail::make_report(scan, fmt::format("z/(1+z) <= {}(z) <= z/(1-z)", m.id), {m.id}, grid,
                             tol, [&](std::size_t i) { return std::vector<double>{grid.at(i)}; });
}

CheckReport roundtrip_check(const MeanDescriptor& mean, const GridSpec& grid, double rel_tol) {
  grid.validate();
  const MeanDescriptor rebuilt = seiffert_to_mean(mean_to_seiffert(mean));
  const auto coords = [&](std::size_t i) {
    return std::vector<double>{grid.x(i / grid.ny), grid.y(i % grid.ny)};
  };
  // Margin is minus the relative error; it fails below -rel_tol.
  const auto margin = [&](std::size_t i) {
    const double x = grid.x(i / grid.ny), y = grid.y(i % grid.ny);
    if (grid.exclude_diagonal && x == y) return std::numeric_limits<double>::quiet_NaN();
    const double expected = mean(x, y);
    return -std::abs(rebuilt(x, y) - expected) / expected;
  };
  const auto scan = kernels::scan_parallel(grid.size(), margin, kernels::Acceptance{rel_tol, false});
  return detail::make_report(scan, fmt::format("seiffert_to_mean(mean_to_seiffert({})) = {}",
                                               mean.id, mean.id),
                             {mean.id}, grid, rel_tol, coords);
}

}  // namespace kyfan
