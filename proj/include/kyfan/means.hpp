#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kyfan {

enum class MeanKind { DirectFormula, SeiffertGenerated, Family };

std::string_view to_string(MeanKind kind);

/// A named symmetric, homogeneous bivariate mean.
///
/// Calling the descriptor validates the arguments (finite, positive), sorts
/// them, returns x on the diagonal and keeps the result inside [min, max].
/// Family entries ("Ar(r)") carry no evaluator and throw when called.
struct MeanDescriptor {
  std::string id;
  std::string display_name;
  MeanKind kind = MeanKind::DirectFormula;
  std::function<double(double lo, double hi)> core;

  double operator()(double x, double y) const;
  bool callable() const { return static_cast<bool>(core); }
};

/// Below this relative gap |x-y|/(x+y) every quotient-form mean returns (x+y)/2.
inline constexpr double kDiagonalCutoff = 1e-8;
/// |r| below this is treated as the geometric mean.
inline constexpr double kPowerZeroCutoff = 1e-12;

/// ((x^r + y^r)/2)^(1/r), sqrt(xy) at r = 0.
double power_mean(double r, double x, double y);
double heronian(double x, double y);

/// Wraps an unchecked core (lo <= hi, lo < hi) into a full descriptor.
MeanDescriptor make_mean(std::string id, std::string display_name, MeanKind kind,
                         std::function<double(double, double)> core);
MeanDescriptor make_power_mean(double r, std::string id = {});

/// The thirteen fixed catalog means, in registry order.
const std::vector<MeanDescriptor>& catalog_means();
/// Catalog means followed by the parametric family entry "Ar(r)".
std::vector<MeanDescriptor> list_means();

/// Resolves a catalog id or a parametric "Ar(<r>)" id, where <r> is a decimal
/// or a fraction p/q. Throws RegistryError for anything else.
MeanDescriptor find_mean(std::string_view id);

/// Parameter syntax shared by "Ar(r)" and "a(r)": a decimal or p/q.
std::optional<double> parse_order(std::string_view text);

double eval_mean(std::string_view id, double x, double y);

}  // namespace kyfan
