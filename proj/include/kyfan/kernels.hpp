#pragma once

// Grid kernels. Every check in the library reduces to one of two loops over a
// flat index range: tabulate a function, or scan a margin function and keep
// the worst sample plus the first violation. Each loop exists twice, an
// OpenMP version and a serial reference; both return bit-identical results.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include <omp.h>

namespace kyfan::kernels {

/// How a margin is judged. A NaN margin counts as inconclusive.
struct Acceptance {
  double tol = 1e-12;
  bool strict = false;  // strict: margin must exceed -tol; otherwise margin >= -tol

  bool violates(double margin) const {
    return strict ? !(margin > -tol) : margin < -tol;
  }
};

struct ScanResult {
  std::size_t count = 0;
  std::size_t inconclusive = 0;
  std::optional<std::size_t> worst_index;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::optional<std::size_t> first_violation;

  bool operator==(const ScanResult&) const = default;
};

namespace detail {

// Lexicographic (margin, index) minimum. Associative and commutative, so the
// merged result does not depend on chunking.
inline void absorb(ScanResult& acc, const ScanResult& part) {
  acc.count += part.count;
  acc.inconclusive += part.inconclusive;
  if (part.worst_index &&
      (!acc.worst_index || part.worst_margin < acc.worst_margin ||
       (part.worst_margin == acc.worst_margin && *part.worst_index < *acc.worst_index))) {
    acc.worst_index = part.worst_index;
    acc.worst_margin = part.worst_margin;
  }
  if (part.first_violation &&
      (!acc.first_violation || *part.first_violation < *acc.first_violation)) {
    acc.first_violation = part.first_violation;
  }
}

template <class MarginFn>
ScanResult scan_range(std::size_t begin, std::size_t end, MarginFn& margin,
                      const Acceptance& acceptance) {
  ScanResult r;
  for (std::size_t i = begin; i < end; ++i) {
    const double m = margin(i);
    ++r.count;
    if (std::isnan(m)) {
      ++r.inconclusive;
      continue;
    }
    if (!r.worst_index || m < r.worst_margin) {
      r.worst_index = i;
      r.worst_margin = m;
    }
    if (!r.first_violation && acceptance.violates(m)) r.first_violation = i;
  }
  return r;
}

// Static contiguous chunk of [0, n) owned by thread `t` of `nthreads`.
inline std::pair<std::size_t, std::size_t> chunk(std::size_t n, int t, int nthreads) {
  const std::size_t per = n / static_cast<std::size_t>(nthreads);
  const std::size_t extra = n % static_cast<std::size_t>(nthreads);
  const auto ut = static_cast<std::size_t>(t);
  const std::size_t begin = ut * per + std::min(ut, extra);
  return {begin, begin + per + (ut < extra ? 1 : 0)};
}

// Exceptions may not cross an OpenMP region; the lowest-chunk one is rethrown.
inline void rethrow_first(const std::vector<std::exception_ptr>& errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

template <class MarginFn>
ScanResult scan_serial(std::size_t n, MarginFn&& margin, const Acceptance& acceptance) {
  return detail::scan_range(0, n, margin, acceptance);
}

template <class MarginFn>
ScanResult scan_parallel(std::size_t n, MarginFn&& margin, const Acceptance& acceptance) {
  const int nthreads = std::max(1, omp_get_max_threads());
  std::vector<ScanResult> parts(static_cast<std::size_t>(nthreads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    const int t = omp_get_thread_num();
    const int team = omp_get_num_threads();
    const auto [begin, end] = detail::chunk(n, t, team);
    try {
      parts[static_cast<std::size_t>(t)] = detail::scan_range(begin, end, margin, acceptance);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);
  ScanResult total;
  for (const auto& p : parts) detail::absorb(total, p);
  return total;
}

template <class Fn>
std::vector<double> tabulate_serial(std::size_t n, Fn&& fn) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

template <class Fn>
std::vector<double> tabulate_parallel(std::size_t n, Fn&& fn) {
  std::vector<double> out(n);
  const int nthreads = std::max(1, omp_get_max_threads());
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
  {
    const int t = omp_get_thread_num();
    const auto [begin, end] = detail::chunk(n, t, omp_get_num_threads());
    try {
      for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
    } catch (...) {
      errors[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);
  return out;
}

}  // namespace kyfan::kernels
