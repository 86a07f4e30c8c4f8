#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "kyfan/grid.hpp"
#include "kyfan/report.hpp"
#include "kyfan/verify.hpp"

namespace kyfan {

/// A derivative-sign claim that backs one of the monotonicity steps, checked
/// numerically by check_derivative_sign.
struct DerivativeClaim {
  std::string name;
  std::string description;
  std::function<double(double)> f;
  Interval interval;
  Sign expected = Sign::Positive;
};

const std::vector<DerivativeClaim>& derivative_claims();
const DerivativeClaim& find_derivative_claim(std::string_view name);

CheckReport run_derivative_claim(const DerivativeClaim& claim, const CheckOptions& opts = {});

}  // namespace kyfan
