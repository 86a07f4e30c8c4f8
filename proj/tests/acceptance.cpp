// Acceptance suite: one PASS/FAIL line per criterion; exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>

#include <fmt/format.h>

#include "kyfan/chains.hpp"
#include "kyfan/errors.hpp"
#include "kyfan/means.hpp"
#include "kyfan/note.hpp"
#include "kyfan/seiffert.hpp"
#include "kyfan/series.hpp"
#include "kyfan/verify.hpp"

using namespace kyfan;

namespace {

constexpr double kTol = 1e-12;

// Taylor coefficient of (1-s)^5 in the log-mean target (tools/taylor_oracle.py).
constexpr double kOracleC5 = -0.3;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

bool ok_margin(const CheckReport& r) { return r.passed() && r.worst_margin >= -kTol; }

std::string describe(const CheckReport& r) {
  return fmt::format("{} [{}] {} (worst margin {:.3g})", r.relation, fmt::join(r.subjects, ","),
                     to_string(r.verdict), r.worst_margin);
}

MeanDescriptor M(const std::string& id) { return find_mean(id); }

const GridSpec kGrid = default_kyfan_grid();

template <class F>
void guarded(int id, const std::string& title, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, title, false, std::string("exception: ") + e.what());
  }
}

void chain_reproduction() {
  guarded(1, "ns2003 chain on 400x400", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto reports = verify_chain(find_chain_preset("ns2003").chains.at(0));
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = reports.size() == 5 && secs < 10.0;
    double worst = INFINITY;
    for (const auto& r : reports) {
      ok = ok && ok_margin(r);
      worst = std::min(worst, r.worst_margin);
    }
    report(1, "ns2003 chain on 400x400", ok,
           fmt::format("{} pairs, worst margin {:.3g}, {:.2f} s", reports.size(), worst, secs));
  });
}

void quadratic_extension() {
  guarded(2, "T/T' <= Q/Q'", [] {
    const auto r = check_ratio_kyfan(M("T"), M("Q"), kGrid);
    report(2, "T/T' <= Q/Q'", ok_margin(r), describe(r));
  });
}

void power_means() {
  guarded(3, "power means", [] {
    const std::pair<const char*, const char*> pairs[] = {
        {"Ar(-1)", "Ar(0)"}, {"Ar(0)", "Ar(1)"}, {"Ar(1/3)", "Ar(1/2)"}, {"Ar(1)", "Ar(2)"}};
    bool ok = true;
    std::string detail;
    for (const auto& [r, s] : pairs) {
      const auto fwd = check_ratio_kyfan(M(r), M(s), kGrid);
      const auto rev = check_ratio_kyfan(M(s), M(r), kGrid);
      const bool witnessed = rev.verdict == Verdict::Fail && rev.first_violation.has_value();
      ok = ok && ok_margin(fwd) && witnessed;
      detail += fmt::format("{}<={} {}; reversed {}", r, s, to_string(fwd.verdict), to_string(rev.verdict));
      if (rev.first_violation)
        detail += fmt::format(" at ({:.4g}, {:.4g})", (*rev.first_violation)[0], (*rev.first_violation)[1]);
      detail += "; ";
    }
    report(3, "power means", ok, detail);
  });
}

void heronian() {
  guarded(4, "Heronian", [] {
    const auto a = check_ratio_kyfan(M("Ar(1/2)"), M("He"), kGrid);
    const auto b = check_ratio_kyfan(M("He"), M("Ar(2/3)"), kGrid);
    report(4, "Heronian", ok_margin(a) && ok_margin(b), describe(a) + "; " + describe(b));
  });
}

void logarithmic() {
  guarded(5, "logarithmic mean and series", [] {
    const auto r = check_ratio_kyfan(M("L"), M("Ar(1/3)"), kGrid);
    const auto c = log_series_coeffs(200);
    bool negative = true;
    for (double v : c.values) negative = negative && v < 0.0;
    const double c5 = c.at(5);
    const bool formula = std::abs(c5 - (-0.1)) <= 1e-12;
    const bool oracle = std::abs(c5 - kOracleC5) <= 1e-9;
    report(5, "logarithmic mean and series", ok_margin(r) && negative && formula && oracle,
           fmt::format("{}; coeffs < 0: {}; c_5 = {} (formula -0.1: {}, Taylor oracle {}: {})",
                       describe(r), negative, c5, formula ? "ok" : "off", kOracleC5,
                       oracle ? "ok" : "off"));
  });
}

void seiffert_type() {
  guarded(6, "Seiffert-type examples", [] {
    const auto a = check_ratio_kyfan(M("Ssinh"), M("A"), kGrid);
    const auto b = check_ratio_kyfan(M("Ar(1/2)"), M("P"), kGrid);
    const auto c = check_ratio_kyfan(M("L"), M("Stan"), kGrid);
    const auto coeffs = artanh_tan_coeffs(200);
    bool nonneg = true;
    for (double v : coeffs.values) nonneg = nonneg && v >= 0.0;
    const bool a1 = std::abs(coeffs.at(1)) <= 1e-15;
    report(6, "Seiffert-type examples", ok_margin(a) && ok_margin(b) && ok_margin(c) && nonneg && a1,
           fmt::format("{}; {}; {}; coeffs >= 0: {}; a_1 = {}", describe(a), describe(b), describe(c),
                       nonneg, coeffs.at(1)));
  });
}

void harmonic_chains() {
  guarded(7, "harmonic chains", [] {
    bool ok = true;
    std::size_t n = 0;
    double worst = INFINITY;
    for (const char* name : {"harmonic-upper", "harmonic-lower"})
      for (const auto& chain : find_chain_preset(name).chains)
        for (const auto& r : verify_chain(chain)) {
          ok = ok && ok_margin(r);
          worst = std::min(worst, r.worst_margin);
          ++n;
        }
    report(7, "harmonic chains", ok && n == 10, fmt::format("{} pairs, worst margin {:.3g}", n, worst));
  });
}

CheckReport hypothesis(const PairClaim& p, const Interval& line) {
  const auto m = mean_to_seiffert(M(p.lower));
  const auto n = mean_to_seiffert(M(p.upper));
  return p.relation == Relation::Ratio ? check_ratio_monotone(m, n, line)
                                       : check_diff_decreasing(m, n, line);
}

void soundness() {
  const Interval line = default_unit_interval();
  std::size_t hyp = 0, broken = 0, exceptions = 0;
  for (const auto& p : preset_pairs()) {
    try {
      if (!hypothesis(p, line).passed()) continue;
      ++hyp;
      broken += !ok_margin(check_kyfan(p.relation, M(p.lower), M(p.upper), kGrid));
    } catch (const std::exception&) {
      ++exceptions;
    }
  }
  report(8, "hypothesis implies conclusion", broken == 0 && exceptions == 0,
         fmt::format("{} pairs, {} hypotheses hold, {} conclusions broken, {} exceptions",
                     preset_pairs().size(), hyp, broken, exceptions));
}

void equivalence() {
  const Interval line = default_unit_interval();
  std::size_t disagree = 0, exceptions = 0;
  for (const auto& p : preset_pairs()) {
    try {
      const auto m = M(p.lower), n = M(p.upper);
      disagree += check_ratio_monotone(mean_to_seiffert(m), mean_to_seiffert(n), line).passed() !=
                  check_q_increasing(m, n, line).passed();
    } catch (const std::exception&) {
      ++exceptions;
    }
  }
  report(9, "ratio-monotone vs q-increasing", disagree == 0 && exceptions == 0,
         fmt::format("{} pairs, {} disagreements, {} exceptions", preset_pairs().size(), disagree,
                     exceptions));
}

void roundtrip() {
  guarded(10, "mean -> Seiffert -> mean", [] {
    const GridSpec g{1e-3, 1.0, 1e-3, 1.0, 100, 100, false};
    bool ok = true;
    double worst = 0.0;
    for (const auto& m : catalog_means()) {
      const auto r = roundtrip_check(m, g);
      ok = ok && r.passed() && r.samples == 10000;
      worst = std::min(worst, r.worst_margin);
    }
    report(10, "mean -> Seiffert -> mean", ok,
           fmt::format("{} means x 10^4 points, max relative error {:.3g}", catalog_means().size(), -worst));
  });
}

void sandwich() {
  guarded(11, "Seiffert sandwich", [] {
    bool ok = true;
    std::string bad;
    for (const auto& f : builtin_seiffert()) {
      const auto r = validate_seiffert(f, default_unit_interval());
      if (!r.passed()) bad += " " + f.id;
      ok = ok && r.passed();
    }
    report(11, "Seiffert sandwich", ok,
           fmt::format("{} builtin functions on 4000 points{}", builtin_seiffert().size(),
                       bad.empty() ? "" : ", failing:" + bad));
  });
}

void cosh_bound() {
  guarded(12, "cosh bound", [] {
    const auto r = cosh_bound_check(default_cosh_interval());
    report(12, "cosh bound", r.passed() && r.samples == 4000, describe(r));
  });
}

void note() {
  guarded(13, "non-monotone counterexample", [] {
    const auto demo = note_counterexample();
    const auto& w = demo.monotonicity.worst_point;
    const bool witness = w.size() == 2 && w[0] < w[1] && demo.f(w[0]) > demo.f(w[1]);
    report(13, "non-monotone counterexample", demo.inequality.passed() && witness,
           fmt::format("inequality {} on {} pairs; witness {}", to_string(demo.inequality.verdict),
                       demo.inequality.samples,
                       witness ? fmt::format("t1 = {:.6g}, t2 = {:.6g}", w[0], w[1]) : "none"));
  });
}

void axioms() {
  guarded(14, "mean axioms", [] {
    std::mt19937_64 rng(20031);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    std::size_t bad = 0, pairs = 0;
    while (pairs < 10000) {
      const double x = u(rng), y = u(rng);
      if (!(x > 0.0 && y > 0.0)) continue;
      ++pairs;
      for (const auto& m : catalog_means()) {
        const double v = m(x, y);
        bad += !(v >= std::min(x, y) && v <= std::max(x, y));
        bad += m(y, x) != v;
        bad += m(x, x) != x;
        for (double lambda : {1e-6, 1e6})
          bad += !(std::abs(m(lambda * x, lambda * y) - lambda * v) <= 1e-12 * lambda * v);
      }
    }
    report(14, "mean axioms", bad == 0,
           fmt::format("{} means x {} pairs, {} failures", catalog_means().size(), pairs, bad));
  });
}

}  // namespace

int main() {
  chain_reproduction();
  quadratic_extension();
  power_means();
  heronian();
  logarithmic();
  seiffert_type();
  harmonic_chains();
  soundness();
  equivalence();
  roundtrip();
  sandwich();
  cosh_bound();
  note();
  axioms();
  std::printf("%d of 14 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
