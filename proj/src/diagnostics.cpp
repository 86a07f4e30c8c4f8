#include "kyfan/diagnostics.hpp"

#include <cmath>

#include "kyfan/errors.hpp"
#include "kyfan/means.hpp"
#include "kyfan/seiffert.hpp"

namespace kyfan {

namespace {

// Function of z in (0,1) or t in (0,1); both checked away from the endpoints.
constexpr Interval kClaimInterval{0.01, 0.99, 2000};

double q_fn(double z) { return z / std::sqrt(1.0 + z * z); }
double a_half(double z) { return 2.0 * z / (1.0 + std::sqrt(1.0 - z * z)); }

}  // namespace

const std::vector<DerivativeClaim>& derivative_claims() {
  static const std::vector<DerivativeClaim> claims = [] {
    const auto L = find_mean("L");
    const auto A13 = find_mean("Ar(1/3)");
    const auto He = find_mean("He");
    const auto A23 = find_mean("Ar(2/3)");
    const auto A12 = find_mean("Ar(1/2)");
    const auto P = Sign::Positive;
    const auto N = Sign::Negative;
    std::vector<DerivativeClaim> c = {
        // ratio-form hypotheses
        {"arctan-over-q", "arctan z / (z/sqrt(1+z^2))",
         [](double z) { return std::atan(z) / q_fn(z); }, kClaimInterval, P},
        {"He-over-A2/3", "He(1,t)/A_{2/3}(1,t)",
         [He, A23](double t) { return He(1.0, t) / A23(1.0, t); }, kClaimInterval, P},
        {"He-over-A1/2", "He(1,t)/A_{1/2}(1,t)",
         [He, A12](double t) { return He(1.0, t) / A12(1.0, t); }, kClaimInterval, N},
        {"A1/3-over-L", "A_{1/3}(1,t)/L(1,t)",
         [L, A13](double t) { return A13(1.0, t) / L(1.0, t); }, kClaimInterval, N},
        {"sinh-over-id", "sinh z / z", [](double z) { return std::sinh(z) / z; },
         kClaimInterval, P},
        {"arcsin-over-a1/2", "arcsin z / a_{1/2}(z)",
         [](double z) { return std::asin(z) / a_half(z); }, kClaimInterval, N},
        {"artanh-over-tan", "artanh z / tan z", [](double z) { return artanh(z) / std::tan(z); },
         kClaimInterval, P},
        // difference-form hypotheses, upper harmonic chain
        {"arctan-minus-tanh", "arctan z - tanh z",
         [](double z) { return std::atan(z) - std::tanh(z); }, kClaimInterval, P},
        {"sin-minus-arctan", "sin z - arctan z",
         [](double z) { return std::sin(z) - std::atan(z); }, kClaimInterval, P},
        {"arsinh-minus-sin", "arsinh z - sin z",
         [](double z) { return std::asinh(z) - std::sin(z); }, kClaimInterval, P},
        {"id-minus-arsinh", "z - arsinh z", [](double z) { return z - std::asinh(z); },
         kClaimInterval, P},
        // lower harmonic chain
        {"sinh-minus-id", "sinh z - z", [](double z) { return std::sinh(z) - z; }, kClaimInterval,
         P},
        {"tan-minus-sinh", "tan z - sinh z", [](double z) { return std::tan(z) - std::sinh(z); },
         kClaimInterval, P},
        {"artanh-minus-tan", "artanh z - tan z", [](double z) { return artanh(z) - std::tan(z); },
         kClaimInterval, P},
        {"arcsin-minus-sinh", "arcsin z - sinh z",
         [](double z) { return std::asin(z) - std::sinh(z); }, kClaimInterval, P},
        {"artanh-minus-arcsin", "artanh z - arcsin z",
         [](double z) { return artanh(z) - std::asin(z); }, kClaimInterval, P},
    };
    return c;
  }();
  return claims;
}

const DerivativeClaim& find_derivative_claim(std::string_view name) {
  for (const auto& c : derivative_claims())
    if (c.name == name) return c;
  throw RegistryError("unknown derivative claim '" + std::string(name) + "'");
}

CheckReport run_derivative_claim(const DerivativeClaim& claim, const CheckOptions& opts) {
  CheckReport r = check_derivative_sign(claim.f, claim.interval, claim.expected, opts);
  r.relation = "d/dz [" + claim.description + "] " +
               (claim.expected == Sign::Positive ? "> 0" : "< 0");
  r.subjects = {claim.name};
  return r;
}

}  // namespace kyfan
