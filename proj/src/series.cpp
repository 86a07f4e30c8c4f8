#include "kyfan/series.hpp"

#include <cmath>

#include <fmt/format.h>

#include "kyfan/errors.hpp"
#include "kyfan/kernels.hpp"
#include "kyfan/seiffert.hpp"
#include "scan_report.hpp"

namespace kyfan {

std::string_view to_string(SeriesFamily family) {
  return family == SeriesFamily::LogMean ? "log-mean-series" : "artanh-tan-series";
}

SeriesFamily parse_series_family(std::string_view name) {
  if (name == "log-mean-series" || name == "log-mean") return SeriesFamily::LogMean;
  if (name == "artanh-tan-series" || name == "artanh-tan") return SeriesFamily::ArtanhTan;
  throw RegistryError("unknown series family '" + std::string(name) + "'");
}

CoefficientSequence log_series_coeffs(std::size_t n_max) {
  if (n_max < 5) throw DomainError(fmt::format("log-mean series starts at n = 5, got n_max = {}", n_max));
  CoefficientSequence seq{SeriesFamily::LogMean, 5, {}};
  seq.values.reserve(n_max - 4);
  for (std::size_t k = 5; k <= n_max; ++k) {
    const auto n = static_cast<double>(k);
    seq.values.push_back(-(n * n - 5.0 * n + 12.0) / (n * (n - 1.0) * (n - 2.0) * (n - 3.0)));
  }
  return seq;
}

CoefficientSequence artanh_tan_coeffs(std::size_t n_max) {
  if (n_max < 1) throw DomainError("artanh-tan series starts at n = 1");
  CoefficientSequence seq{SeriesFamily::ArtanhTan, 1, {}};
  seq.values.reserve(n_max);
  double pow4_over_fact = 1.0;  // 4^n / (2n)!, underflows to 0 past n ~ 85
  for (std::size_t k = 1; k <= n_max; ++k) {
    const auto n = static_cast<double>(k);
    pow4_over_fact *= 4.0 / ((2.0 * n) * (2.0 * n - 1.0));
    const double alternating = (k % 2 == 0) ? pow4_over_fact : -pow4_over_fact;
    const double bracket = 2.0 + alternating * (2.0 * n - 1.0);
    seq.values.push_back(bracket / ((2.0 * n + 1.0) * (2.0 * n - 1.0)));
  }
  return seq;
}

double log_mean_target(double s) {
  return s * s * s * s + s * s * s - s - 1.0 - 3.0 * (s * s + 1.0) * s * std::log(s);
}

double artanh_tan_target(double z) {
  return 0.5 * std::sin(2.0 * z) - (1.0 - z * z) * artanh(z);
}

namespace {

// Term `index` of the series at `point`, scale included.
double series_term(const CoefficientSequence& seq, std::size_t index, double point) {
  if (seq.family == SeriesFamily::LogMean)
    return kLogMeanSeriesScale * seq.at(index) * std::pow(1.0 - point, static_cast<double>(index));
  return seq.at(index) * std::pow(point, static_cast<double>(2 * index + 1));
}

CoefficientSequence coeffs_for(SeriesFamily family, std::size_t n_terms) {
  // One extra coefficient so the first omitted term is available.
  return family == SeriesFamily::LogMean ? log_series_coeffs(5 + n_terms)
                                         : artanh_tan_coeffs(1 + n_terms);
}

double partial_sum_with(const CoefficientSequence& seq, std::size_t n_terms, double point) {
  double sum = 0.0;
  for (std::size_t k = 0; k < n_terms; ++k) sum += series_term(seq, seq.first_index + k, point);
  return sum;
}

}  // namespace

double partial_sum(SeriesFamily family, std::size_t n_terms, double point) {
  return partial_sum_with(coeffs_for(family, n_terms), n_terms, point);
}

CheckReport partial_sum_vs_function(SeriesFamily family, std::size_t n_terms,
                                    const Interval& grid) {
  grid.validate();
  if (family == SeriesFamily::LogMean) {
    if (!(grid.lo >= 0.5 && grid.hi <= 1.5))
      throw DomainError(fmt::format("log-mean series needs |1-s| <= 0.5, got [{}, {}]", grid.lo, grid.hi));
  } else if (!(grid.lo > 0.0 && grid.hi <= 0.5)) {
    throw DomainError(fmt::format("artanh-tan series needs 0 < z <= 0.5, got [{}, {}]", grid.lo, grid.hi));
  }
  const CoefficientSequence seq = coeffs_for(family, n_terms);
  const auto target = family == SeriesFamily::LogMean ? log_mean_target : artanh_tan_target;
  const auto margin = [&](std::size_t i) {
    const double p = grid.at(i);
    const double omitted = series_term(seq, seq.first_index + n_terms, p);
    const double bound = std::max(1e-10, 2.0 * std::abs(omitted));
    return bound - std::abs(partial_sum_with(seq, n_terms, p) - target(p));
  };
  const auto scan = kernels::scan_parallel(grid.n, margin, kernels::Acceptance{0.0, false});
  return detail::make_report(
      scan, fmt::format("|partial sum ({} terms) - target| <= max(1e-10, 2|first omitted term|)", n_terms),
      {std::string(to_string(family))}, grid, 0.0,
      [&](std::size_t i) { return std::vector<double>{grid.at(i)}; });
}

double cosh_taylor_remainder(double z) {
  const double az = std::abs(z);
  if (az > 0.5) return std::cosh(z) - 1.0 - 0.5 * z * z;
  const double z2 = z * z;
  double term = z2 * z2 / 24.0;  // z^4 / 4!
  double sum = 0.0;
  for (int k = 2; k < 40 && term != 0.0; ++k) {
    sum += term;
    term *= z2 / ((2.0 * k + 1.0) * (2.0 * k + 2.0));
    if (term < sum * 1e-18) break;
  }
  return sum;
}

CheckReport cosh_bound_check(const Interval& grid) {
  grid.validate_unit();
  // 1 + z^2/2 + z^4/12 - cosh z, free of the cancellation near 0.
  const auto margin = [&](std::size_t i) {
    const double z = grid.at(i);
    return z * z * z * z / 12.0 - cosh_taylor_remainder(z);
  };
  const auto scan = kernels::scan_parallel(grid.n, margin, kernels::Acceptance{0.0, true});
  return detail::make_report(scan, "cosh z < 1 + z^2/2 + z^4/12", {"cosh"}, grid, 0.0,
                             [&](std::size_t i) { return std::vector<double>{grid.at(i)}; });
}

Interval default_cosh_interval() { return Interval{1.0 / 4001.0, 4000.0 / 4001.0, 4000}; }

}  // namespace kyfan
