#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kyfan/grid.hpp"
#include "kyfan/means.hpp"
#include "kyfan/report.hpp"

namespace kyfan {

enum class SeiffertOrigin { Builtin, ExtractedFromMean };

std::string_view to_string(SeiffertOrigin origin);

/// A function m on (0,1) expected to satisfy z/(1+z) <= m(z) <= z/(1-z).
struct SeiffertDescriptor {
  std::string id;
  SeiffertOrigin origin = SeiffertOrigin::Builtin;
  std::function<double(double)> core;

  /// Throws DomainError unless 0 < z < 1.
  double operator()(double z) const;
};

double artanh(double z);

/// Builtin functions: id, sin, sinh, tan, tanh, arcsin, arctan, arsinh,
/// artanh, q, plus the parametric "a(<r>)" (Seiffert function of A_r).
const std::vector<SeiffertDescriptor>& builtin_seiffert();
SeiffertDescriptor find_seiffert(std::string_view id);
SeiffertDescriptor make_power_seiffert(double r, std::string id = {});

/// Function or mean id: a catalog mean id resolves to its extracted function.
SeiffertDescriptor resolve_seiffert(std::string_view id);

/// m(z) = z / M(1+z, 1-z).
SeiffertDescriptor mean_to_seiffert(const MeanDescriptor& mean);

/// M(x,y) = |x-y| / (2 m(|x-y|/(x+y))). Throws InvariantError when the value
/// leaves [min(x,y), max(x,y)], which happens iff m breaks the sandwich there.
MeanDescriptor seiffert_to_mean(const SeiffertDescriptor& m);

inline constexpr double kSandwichTolerance = 1e-12;
inline constexpr double kRoundtripTolerance = 1e-12;

CheckReport validate_seiffert(const SeiffertDescriptor& m, const Interval& grid,
                              double tol = kSandwichTolerance);
CheckReport roundtrip_check(const MeanDescriptor& mean, const GridSpec& grid,
                            double rel_tol = kRoundtripTolerance);

}  // namespace kyfan
