#pragma once

#include <functional>

#include "kyfan/grid.hpp"
#include "kyfan/means.hpp"
#include "kyfan/report.hpp"
#include "kyfan/seiffert.hpp"

namespace kyfan {

inline constexpr double kMarginTolerance = 1e-12;

/// Execution policy for grid evaluation. Both policies give identical reports.
enum class Execution { Parallel, Serial };

struct CheckOptions {
  double tol = kMarginTolerance;
  Execution execution = Execution::Parallel;
};

/// M(1-x, 1-y) for 0 < x, y <= 1/2.
double prime_of(const MeanDescriptor& mean, double x, double y);

/// Which Ky Fan relation a pair is checked under.
enum class Relation { Ratio, Harmonic };

std::string_view to_string(Relation relation);

/// Per-point sides of a Ky Fan inequality: lhs from M, rhs from N.
/// Ratio: M/M' <= N/N'. Harmonic: 1/M - 1/M' <= 1/N - 1/N'.
struct KyFanSample {
  double x, y, lhs, rhs;
  double margin() const { return rhs - lhs; }
};

KyFanSample kyfan_sample(Relation relation, const MeanDescriptor& m, const MeanDescriptor& n,
                         double x, double y);

CheckReport check_kyfan(Relation relation, const MeanDescriptor& m, const MeanDescriptor& n,
                        const GridSpec& grid, const CheckOptions& opts = {});
CheckReport check_ratio_kyfan(const MeanDescriptor& m, const MeanDescriptor& n,
                              const GridSpec& grid, const CheckOptions& opts = {});
CheckReport check_harmonic_kyfan(const MeanDescriptor& m, const MeanDescriptor& n,
                                 const GridSpec& grid, const CheckOptions& opts = {});

/// Pairwise non-increasing check of n/m on the grid (Seiffert-level
/// hypothesis for the ratio inequality M/M' <= N/N').
CheckReport check_ratio_monotone(const SeiffertDescriptor& m, const SeiffertDescriptor& n,
                                 const Interval& grid, const CheckOptions& opts = {});
/// Pairwise non-decreasing check of t -> M(1,t)/N(1,t) on (0,1).
CheckReport check_q_increasing(const MeanDescriptor& m, const MeanDescriptor& n,
                               const Interval& grid, const CheckOptions& opts = {});
/// Pairwise non-increasing check of m - n (hypothesis for the harmonic form).
CheckReport check_diff_decreasing(const SeiffertDescriptor& m, const SeiffertDescriptor& n,
                                  const Interval& grid, const CheckOptions& opts = {});
/// Pairwise non-increasing check of g(s) = (s-1)(1/M(s,1) - 1/N(s,1)), s > 1.
CheckReport check_g_decreasing(const MeanDescriptor& m, const MeanDescriptor& n,
                               const Interval& grid, const CheckOptions& opts = {});

/// Pairwise non-decreasing / non-increasing check of an arbitrary function.
CheckReport check_monotone(const std::function<double(double)>& f, bool increasing,
                           const Interval& grid, const CheckOptions& opts = {});

enum class Sign { Positive, Negative };

inline constexpr double kDerivativeStep = 1e-6;
inline constexpr double kDerivativeFloor = 1e-9;

/// Central differences with step 1e-6. Points with |f'| <= 1e-9 are
/// inconclusive; the verdict is inconclusive when every point is.
CheckReport check_derivative_sign(const std::function<double(double)>& f, const Interval& grid,
                                  Sign expected, const CheckOptions& opts = {});

}  // namespace kyfan
