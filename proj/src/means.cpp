#include "kyfan/means.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include <fmt/format.h>

#include "kyfan/errors.hpp"

namespace kyfan {

std::string_view to_string(MeanKind kind) {
  switch (kind) {
    case MeanKind::DirectFormula:
      return "direct-formula";
    case MeanKind::SeiffertGenerated:
      return "seiffert-generated";
    case MeanKind::Family:
      return "family";
  }
  return "?";
}

namespace {

void require_positive(double x, double y) {
  if (!(std::isfinite(x) && std::isfinite(y) && x > 0.0 && y > 0.0)) {
    throw DomainError(fmt::format("mean arguments must be finite and positive, got ({}, {})", x, y));
  }
}

// Slack for rounding in the last place before a value counts as leaving [lo, hi].
constexpr double kBoundSlack = 16 * std::numeric_limits<double>::epsilon();

// Quotient form |x-y| / (2 m(z)) shared by every Seiffert-generated mean.
template <class Seiffert>
auto seiffert_core(Seiffert m) {
  return [m](double lo, double hi) {
    const double z = (hi - lo) / (hi + lo);
    if (z < kDiagonalCutoff) return 0.5 * (lo + hi);
    return (hi - lo) / (2.0 * m(z));
  };
}

}  // namespace

double MeanDescriptor::operator()(double x, double y) const {
  if (!core) throw RegistryError("mean '" + id + "' is a family; pick a parameter");
  require_positive(x, y);
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo == hi) return lo;
  const double v = core(lo, hi);
  if (!(v >= lo * (1.0 - kBoundSlack) && v <= hi * (1.0 + kBoundSlack))) {
    throw InvariantError(fmt::format("mean '{}' left [min, max] at ({}, {}): {}", id, x, y, v));
  }
  return std::clamp(v, lo, hi);
}

double power_mean(double r, double x, double y) {
  if (!std::isfinite(r)) throw DomainError("power mean order must be finite");
  require_positive(x, y);
  const double lo = std::min(x, y);
  const double hi = std::max(x, y);
  if (lo == hi) return lo;
  if (std::abs(r) < kPowerZeroCutoff) return std::sqrt(lo) * std::sqrt(hi);
  // Factor out hi (r > 0) or lo (r < 0) so the remaining power is <= 1, and
  // go through expm1/log1p so small |r| keeps full precision.
  const double base = r > 0 ? hi : lo;
  const double ratio = r > 0 ? lo / hi : hi / lo;
  const double w = r * std::log(ratio);
  return std::clamp(base * std::exp(std::log1p(0.5 * std::expm1(w)) / r), lo, hi);
}

double heronian(double x, double y) {
  require_positive(x, y);
  if (x == y) return x;
  return (x + std::sqrt(x) * std::sqrt(y) + y) / 3.0;
}

MeanDescriptor make_mean(std::string id, std::string display_name, MeanKind kind,
                         std::function<double(double, double)> core) {
  return MeanDescriptor{std::move(id), std::move(display_name), kind, std::move(core)};
}

MeanDescriptor make_power_mean(double r, std::string id) {
  if (!std::isfinite(r)) throw DomainError("power mean order must be finite");
  if (id.empty()) id = fmt::format("Ar({})", r);
  return make_mean(std::move(id), fmt::format("power mean of order {}", r), MeanKind::DirectFormula,
                   [r](double lo, double hi) { return power_mean(r, lo, hi); });
}

const std::vector<MeanDescriptor>& catalog_means() {
  static const std::vector<MeanDescriptor> catalog = [] {
    using K = MeanKind;
    std::vector<MeanDescriptor> c;
    c.push_back(make_mean("A", "arithmetic", K::DirectFormula,
                          [](double lo, double hi) {
                            const double s = lo + hi;
                            return std::isfinite(s) ? 0.5 * s : 0.5 * lo + 0.5 * hi;
                          }));
    c.push_back(make_mean("G", "geometric", K::DirectFormula,
                          [](double lo, double hi) { return std::sqrt(lo) * std::sqrt(hi); }));
    c.push_back(make_mean("H", "harmonic", K::DirectFormula, [](double lo, double hi) {
      return 2.0 * lo * (hi / (lo + hi));
    }));
    c.push_back(make_mean("L", "logarithmic", K::DirectFormula, [](double lo, double hi) {
      const double z = (hi - lo) / (hi + lo);
      if (z < kDiagonalCutoff) return 0.5 * (lo + hi);
      return (hi - lo) / std::log1p((hi - lo) / lo);
    }));
    c.push_back(make_mean("P", "first Seiffert", K::SeiffertGenerated,
                          seiffert_core([](double z) { return std::asin(z); })));
    c.push_back(make_mean("T", "second Seiffert", K::SeiffertGenerated,
                          seiffert_core([](double z) { return std::atan(z); })));
    c.push_back(make_mean("NS", "Neuman-Sandor", K::SeiffertGenerated,
                          seiffert_core([](double z) { return std::asinh(z); })));
    c.push_back(make_mean("Q", "quadratic", K::DirectFormula, [](double lo, double hi) {
      const double t = lo / hi;
      return hi * std::sqrt(0.5 * (1.0 + t * t));
    }));
    c.push_back(make_mean("He", "Heronian", K::DirectFormula,
                          [](double lo, double hi) { return heronian(lo, hi); }));
    c.push_back(make_mean("Ssin", "sine Seiffert", K::SeiffertGenerated,
                          seiffert_core([](double z) { return std::sin(z); })));
    c.push_back(make_mean("Ssinh", "hyperbolic sine Seiffert", K::SeiffertGenerated,
                          seiffert_core([](double z) { return std::sinh(z); })));
    c.push_back(make_mean("Stan", "tangent Seiffert", K::SeiffertGenerated,
                          seiffert_core([](double z) { return std::tan(z); })));
    c.push_back(make_mean("Stanh", "hyperbolic tangent Seiffert", K::SeiffertGenerated,
                          seiffert_core([](double z) { return std::tanh(z); })));
    return c;
  }();
  return catalog;
}

std::vector<MeanDescriptor> list_means() {
  std::vector<MeanDescriptor> out = catalog_means();
  out.push_back(MeanDescriptor{"Ar(r)", "power mean family", MeanKind::Family, {}});
  return out;
}

namespace {

std::optional<double> parse_number(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

std::optional<double> parse_order(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = parse_number(text.substr(0, slash));
    const auto den = parse_number(text.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
  }
  return parse_number(text);
}

MeanDescriptor find_mean(std::string_view id) {
  for (const auto& m : catalog_means())
    if (m.id == id) return m;
  if (id.starts_with("Ar(") && id.ends_with(")")) {
    if (const auto r = parse_order(id.substr(3, id.size() - 4)))
      return make_power_mean(*r, std::string(id));
  }
  throw RegistryError("unknown mean '" + std::string(id) + "'");
}

double eval_mean(std::string_view id, double x, double y) { return find_mean(id)(x, y); }

}  // namespace kyfan
