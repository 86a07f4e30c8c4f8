#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kyfan/grid.hpp"

namespace kyfan {

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict verdict);

/// Outcome of one sampled inequality or monotonicity check.
///
/// Margins are signed so that a non-negative margin means the claim holds at
/// that sample. worst_point holds the coordinates of the smallest margin: (x, y)
/// for 2-D grids, (z_i, z_{i+1}) for pairwise 1-D comparisons, (z) for
/// pointwise 1-D checks. It is empty only when nothing was sampled.
struct CheckReport {
  std::string relation;
  std::vector<std::string> subjects;
  std::variant<std::monostate, GridSpec, Interval> grid;
  Verdict verdict = Verdict::Pass;
  double worst_margin = 0.0;
  std::vector<double> worst_point;
  std::optional<std::vector<double>> first_violation;
  std::size_t samples = 0;
  std::size_t inconclusive = 0;
  double tolerance = 0.0;

  bool passed() const { return verdict == Verdict::Pass; }
  bool operator==(const CheckReport&) const = default;
};

bool all_passed(const std::vector<CheckReport>& reports);

}  // namespace kyfan
