#pragma once

#include <functional>
#include <string>

#include "kyfan/report.hpp"

namespace kyfan {

/// Piecewise function that is increasing on (0, 1/3) and stays at or above
/// 1/3 on [1/3, 1], yet is not monotone:
///   f(t) = t                      on (0, 1/3)
///   f(t) = 1/3 + (t - 1/3)(1 - t) on [1/3, 1]
double note_function(double t);

struct NoteDemo {
  std::string function_description;
  std::function<double(double)> f;
  /// f((y-x)/(x+y)) > f((y-x)/(2-x-y)) at every sampled 0 < x < y < 1/2.
  CheckReport inequality;
  /// Non-decreasing check of f on (0,1); fails, and worst_point is a witness
  /// pair (t1, t2) with t1 < t2 and f(t1) > f(t2).
  CheckReport monotonicity;
  /// Largest sampled (y-x)/(2-x-y); stays below 1/3.
  double sup_complement_gap = 0.0;
};

/// n points per axis for the triangle grid, n_line for the monotonicity scan.
NoteDemo note_counterexample(std::size_t n = 400, std::size_t n_line = 4000);

}  // namespace kyfan
