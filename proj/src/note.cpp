#include "kyfan/note.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "kyfan/errors.hpp"
#include "kyfan/kernels.hpp"
#include "kyfan/verify.hpp"
#include "scan_report.hpp"

namespace kyfan {

double note_function(double t) {
  constexpr double third = 1.0 / 3.0;
  if (t < third) return t;
  return third + (t - third) * (1.0 - t);
}

NoteDemo note_counterexample(std::size_t n, std::size_t n_line) {
  if (n < 2 || n_line < 2) throw DomainError("note_counterexample needs at least 2 points per axis");
  NoteDemo demo;
  demo.function_description = "f(t) = t on (0,1/3); 1/3 + (t-1/3)(1-t) on [1/3,1]";
  demo.f = note_function;

  // Interior points of (0, 1/2); every pair with x < y.
  const auto axis = [n](std::size_t i) {
    return 0.5 * static_cast<double>(i + 1) / static_cast<double>(n + 1);
  };
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  const auto gap = [&](std::size_t k, bool complement) {
    const double x = axis(pairs[k].first), y = axis(pairs[k].second);
    return complement ? (y - x) / (2.0 - x - y) : (y - x) / (x + y);
  };
  const auto margin = [&](std::size_t k) {
    return note_function(gap(k, false)) - note_function(gap(k, true));
  };
  const auto scan = kernels::scan_parallel(pairs.size(), margin, kernels::Acceptance{0.0, true});
  demo.inequality = detail::make_report(
      scan, "f((y-x)/(x+y)) > f((y-x)/(2-x-y)) for 0 < x < y < 1/2", {"f"},
      GridSpec{axis(0), axis(n - 1), axis(0), axis(n - 1), n, n, true}, 0.0, [&](std::size_t k) {
        return std::vector<double>{axis(pairs[k].first), axis(pairs[k].second)};
      });

  const auto complements =
      kernels::tabulate_parallel(pairs.size(), [&](std::size_t k) { return gap(k, true); });
  demo.sup_complement_gap = *std::max_element(complements.begin(), complements.end());

  demo.monotonicity = check_monotone(note_function, true, Interval{1e-4, 1.0, n_line});
  demo.monotonicity.relation = "f non-decreasing on (0,1]";
  return demo;
}

}  // namespace kyfan
