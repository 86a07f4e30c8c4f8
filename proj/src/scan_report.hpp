#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "kyfan/kernels.hpp"
#include "kyfan/report.hpp"
#include "kyfan/verify.hpp"

namespace kyfan::detail {

template <class MarginFn>
kernels::ScanResult run_scan(Execution execution, std::size_t n, MarginFn&& margin,
                             const kernels::Acceptance& acceptance) {
  if (execution == Execution::Serial) return kernels::scan_serial(n, margin, acceptance);
  return kernels::scan_parallel(n, margin, acceptance);
}

template <class Fn>
std::vector<double> run_tabulate(Execution execution, std::size_t n, Fn&& fn) {
  if (execution == Execution::Serial) return kernels::tabulate_serial(n, fn);
  return kernels::tabulate_parallel(n, fn);
}

/// Turns a scan into a report; point_of maps a scan index to coordinates.
template <class PointOf>
CheckReport make_report(const kernels::ScanResult& scan, std::string relation,
                        std::vector<std::string> subjects,
                        std::variant<std::monostate, GridSpec, Interval> grid, double tol,
                        PointOf&& point_of) {
  CheckReport r;
  r.relation = std::move(relation);
  r.subjects = std::move(subjects);
  r.grid = std::move(grid);
  r.samples = scan.count;
  r.inconclusive = scan.inconclusive;
  r.tolerance = tol;
  if (scan.worst_index) {
    r.worst_margin = scan.worst_margin;
    r.worst_point = point_of(*scan.worst_index);
  }
  if (scan.first_violation) {
    r.first_violation = point_of(*scan.first_violation);
    r.verdict = Verdict::Fail;
  } else if (scan.count > 0 && scan.inconclusive == scan.count) {
    r.verdict = Verdict::Inconclusive;
  } else {
    r.verdict = Verdict::Pass;
  }
  return r;
}

}  // namespace kyfan::detail
