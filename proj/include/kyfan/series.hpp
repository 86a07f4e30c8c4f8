#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "kyfan/grid.hpp"
#include "kyfan/report.hpp"

namespace kyfan {

enum class SeriesFamily { LogMean, ArtanhTan };

std::string_view to_string(SeriesFamily family);
SeriesFamily parse_series_family(std::string_view name);

/// Closed-form coefficients of one of the two certified expansions.
///   LogMean:   c_n = -(n^2 - 5n + 12) / (n(n-1)(n-2)(n-3)),  n >= 5,
///              coefficient of (1-s)^n.
///   ArtanhTan: a_n = [2 + (-1)^n 4^n (2n-1)/(2n)!] / ((2n+1)(2n-1)),  n >= 1,
///              coefficient of z^(2n+1).
struct CoefficientSequence {
  SeriesFamily family = SeriesFamily::LogMean;
  std::size_t first_index = 5;
  std::vector<double> values;  // values[k] is the coefficient of index first_index + k

  std::size_t last_index() const { return first_index + values.size() - 1; }
  double at(std::size_t n) const { return values.at(n - first_index); }
};

/// Throws DomainError for n_max < 5.
CoefficientSequence log_series_coeffs(std::size_t n_max);
/// Throws DomainError for n_max < 1.
CoefficientSequence artanh_tan_coeffs(std::size_t n_max);

/// s^4 + s^3 - s - 1 - 3(s^2+1) s log s
double log_mean_target(double s);
/// sin(2z)/2 - (1 - z^2) artanh z
double artanh_tan_target(double z);

/// The log-mean target expands as this multiple of sum c_n (1-s)^n; the
/// closed-form coefficients above are a third of the Taylor coefficients.
inline constexpr double kLogMeanSeriesScale = 3.0;

/// Sum over the first n_terms coefficients at point s (LogMean) or z
/// (ArtanhTan), including kLogMeanSeriesScale for the log-mean family.
double partial_sum(SeriesFamily family, std::size_t n_terms, double point);

/// |partial sum - target| <= max(1e-10, 2 |first omitted term|) on the grid.
/// Grid must stay within |1-s| <= 0.5 (LogMean) or 0 < z <= 0.5 (ArtanhTan);
/// throws DomainError otherwise.
CheckReport partial_sum_vs_function(SeriesFamily family, std::size_t n_terms,
                                    const Interval& grid);

/// cosh z - 1 - z^2/2 without cancellation.
double cosh_taylor_remainder(double z);

/// Strict check of cosh z < 1 + z^2/2 + z^4/12 on a grid in (0,1).
CheckReport cosh_bound_check(const Interval& grid);
/// 4000 interior points of (0,1).
Interval default_cosh_interval();

}  // namespace kyfan
