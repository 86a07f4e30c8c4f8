#include "kyfan/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "kyfan/chains.hpp"
#include "kyfan/diagnostics.hpp"
#include "kyfan/errors.hpp"
#include "kyfan/means.hpp"
#include "kyfan/note.hpp"
#include "kyfan/output.hpp"
#include "kyfan/seiffert.hpp"
#include "kyfan/series.hpp"
#include "kyfan/verify.hpp"

namespace kyfan::cli {

namespace {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text, const char* what) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ConfigError(fmt::format("{}: not a number '{}'", what, text));
  return v;
}

std::pair<std::size_t, std::size_t> parse_grid_env(const std::string& text) {
  const auto parse_count = [&](std::string_view part) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || v < 2)
      throw ConfigError("KYFAN_DEFAULT_GRID must be N or NxM with counts >= 2, got '" + text + "'");
    return v;
  };
  const std::string_view sv(text);
  if (const auto x = sv.find('x'); x != std::string_view::npos)
    return {parse_count(sv.substr(0, x)), parse_count(sv.substr(x + 1))};
  const auto n = parse_count(sv);
  return {n, n};
}

/// Everything a command produces: the rendered stream and the verdicts.
struct Output {
  std::ostringstream stream;
  std::vector<CheckReport> reports;
};

class Runner {
 public:
  explicit Runner(const RunConfig& cfg) : cfg_(cfg) {
    if (cfg_.tol && !(*cfg_.tol > 0.0)) throw ConfigError("--tol must be > 0");
    opts_.tol = cfg_.tol.value_or(kMarginTolerance);
  }

  Output execute() {
    const auto& c = cfg_.command;
    if (c == "eval") eval();
    else if (c == "seiffert") seiffert();
    else if (c == "check") check();
    else if (c == "chain") chain();
    else if (c == "series") series();
    else if (c == "note-demo") note_demo();
    else if (c == "catalog") catalog();
    else throw ConfigError("unknown command '" + c + "'");
    return std::move(out_);
  }

 private:
  const std::string& arg(std::size_t i, const char* what) const {
    if (i >= cfg_.args.size()) throw ConfigError(fmt::format("{} expects <{}>", cfg_.command, what));
    return cfg_.args[i];
  }

  void expect_args(std::size_t lo, std::size_t hi) const {
    if (cfg_.args.size() < lo || cfg_.args.size() > hi)
      throw ConfigError(fmt::format("{}: wrong number of arguments ({})", cfg_.command, cfg_.args.size()));
  }

  GridSpec grid2d() const {
    GridSpec g = default_kyfan_grid();
    if (cfg_.default_grid_env) std::tie(g.nx, g.ny) = parse_grid_env(*cfg_.default_grid_env);
    if (cfg_.nx) g.nx = *cfg_.nx;
    if (cfg_.ny) g.ny = *cfg_.ny;
    if (cfg_.x_min) g.x_min = *cfg_.x_min;
    if (cfg_.x_max) g.x_max = *cfg_.x_max;
    if (cfg_.y_min) g.y_min = *cfg_.y_min;
    if (cfg_.y_max) g.y_max = *cfg_.y_max;
    g.exclude_diagonal = cfg_.exclude_diagonal;
    return g;
  }

  Interval grid1d(Interval g) const {
    if (cfg_.nx) g.n = *cfg_.nx;
    if (cfg_.lo) g.lo = *cfg_.lo;
    if (cfg_.hi) g.hi = *cfg_.hi;
    return g;
  }

  void emit(const CheckReport& r) {
    out_.reports.push_back(r);
    switch (cfg_.format) {
      case Format::Text:
        out_.stream << to_text(r) << '\n';
        break;
      case Format::Json:
        out_.stream << to_json(r).dump(2) << '\n';
        break;
      case Format::Csv:
        out_.stream << kReportCsvHeader << '\n' << to_csv_row(r) << '\n';
        break;
    }
  }

  void emit_value(const std::string& what, const std::vector<std::pair<std::string, double>>& inputs,
                  double value) {
    switch (cfg_.format) {
      case Format::Text:
        out_.stream << fmt::format("{:.15g}\n", value);
        break;
      case Format::Json: {
        Json j;
        j["function"] = what;
        for (const auto& [k, v] : inputs) j[k] = v;
        j["value"] = value;
        out_.stream << j.dump(2) << '\n';
        break;
      }
      case Format::Csv: {
        std::string header = "function", row = what;
        for (const auto& [k, v] : inputs) {
          header += "," + k;
          row += "," + shortest(v);
        }
        out_.stream << header << ",value\n" << row << ',' << shortest(value) << '\n';
        break;
      }
    }
  }

  void eval() {
    expect_args(3, 3);
    const auto mean = find_mean(arg(0, "mean"));
    const double x = parse_real(arg(1, "x"), "x"), y = parse_real(arg(2, "y"), "y");
    emit_value(mean.id, {{"x", x}, {"y", y}}, mean(x, y));
  }

  void seiffert() {
    expect_args(1, 2);
    const auto m = resolve_seiffert(arg(0, "function"));
    if (cfg_.args.size() == 2) {
      const double z = parse_real(cfg_.args[1], "z");
      emit_value(m.id, {{"z", z}}, m(z));
      return;
    }
    emit(validate_seiffert(m, grid1d(default_unit_interval()), cfg_.tol.value_or(kSandwichTolerance)));
  }

  void check() {
    const std::string& kind = arg(0, "kind");
    if (kind == "ratio" || kind == "harmonic") {
      expect_args(3, 3);
      const auto rel = kind == "ratio" ? Relation::Ratio : Relation::Harmonic;
      const auto m = find_mean(cfg_.args[1]), n = find_mean(cfg_.args[2]);
      const GridSpec g = grid2d();
      const CheckReport r = check_kyfan(rel, m, n, g, opts_);
      if (cfg_.format == Format::Csv) {
        out_.reports.push_back(r);
        export_ratio_surface(out_.stream, rel, m, n, g);
      } else {
        emit(r);
      }
    } else if (kind == "ratio-monotone" || kind == "diff-decreasing") {
      expect_args(3, 3);
      const auto m = resolve_seiffert(cfg_.args[1]), n = resolve_seiffert(cfg_.args[2]);
      const Interval g = grid1d(default_unit_interval());
      emit(kind == "ratio-monotone" ? check_ratio_monotone(m, n, g, opts_)
                                    : check_diff_decreasing(m, n, g, opts_));
    } else if (kind == "q-increasing") {
      expect_args(3, 3);
      emit(check_q_increasing(find_mean(cfg_.args[1]), find_mean(cfg_.args[2]),
                              grid1d(default_unit_interval()), opts_));
    } else if (kind == "g-decreasing") {
      expect_args(3, 3);
      emit(check_g_decreasing(find_mean(cfg_.args[1]), find_mean(cfg_.args[2]),
                              grid1d(default_g_interval()), opts_));
    } else if (kind == "roundtrip") {
      expect_args(2, 2);
      GridSpec g = grid2d();
      if (!cfg_.nx && !cfg_.ny && !cfg_.default_grid_env) g.nx = g.ny = 100;
      emit(roundtrip_check(find_mean(cfg_.args[1]), g, cfg_.tol.value_or(kRoundtripTolerance)));
    } else if (kind == "sandwich") {
      expect_args(2, 2);
      emit(validate_seiffert(resolve_seiffert(cfg_.args[1]), grid1d(default_unit_interval()),
                             cfg_.tol.value_or(kSandwichTolerance)));
    } else if (kind == "derivative") {
      expect_args(2, 2);
      DerivativeClaim claim = find_derivative_claim(cfg_.args[1]);
      claim.interval = grid1d(claim.interval);
      emit(run_derivative_claim(claim, opts_));
    } else {
      throw ConfigError("unknown check kind '" + kind + "'");
    }
  }

  void chain() {
    expect_args(1, 1);
    const std::string& name = cfg_.args[0];
    std::vector<const ChainPreset*> presets;
    if (name == "all") {
      for (const auto& p : chain_presets()) presets.push_back(&p);
    } else {
      presets.push_back(&find_chain_preset(name));
    }
    const GridSpec g = grid2d();
    std::vector<CheckReport> reports;
    for (const auto* p : presets) {
      for (ChainSpec spec : p->chains) {
        spec.grid = g;
        for (auto& r : verify_chain(spec, opts_)) reports.push_back(std::move(r));
      }
    }
    out_.reports = reports;
    switch (cfg_.format) {
      case Format::Text:
        for (const auto& r : reports) out_.stream << to_text(r) << '\n';
        out_.stream << fmt::format("chain {}: {}\n", name, all_passed(reports) ? "pass" : "fail");
        break;
      case Format::Json: {
        Json j;
        j["chain"] = name;
        j["verdict"] = all_passed(reports) ? "pass" : "fail";
        j["reports"] = Json::array();
        for (const auto& r : reports) j["reports"].push_back(to_json(r));
        out_.stream << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_.stream << kReportCsvHeader << '\n';
        for (const auto& r : reports) out_.stream << to_csv_row(r) << '\n';
        break;
    }
  }

  void series() {
    expect_args(1, 1);
    const std::string& family_name = cfg_.args[0];
    if (family_name == "cosh") {
      emit(cosh_bound_check(grid1d(default_cosh_interval())));
      return;
    }
    const SeriesFamily family = parse_series_family(family_name);
    const std::size_t terms = cfg_.terms.value_or(50);
    const auto seq = family == SeriesFamily::LogMean ? log_series_coeffs(cfg_.n_max.value_or(12))
                                                     : artanh_tan_coeffs(cfg_.n_max.value_or(8));
    const Interval region = family == SeriesFamily::LogMean ? Interval{0.6, 1.0, 400}
                                                            : Interval{1e-3, 0.5, 400};
    const CheckReport r = partial_sum_vs_function(family, terms, grid1d(region));
    out_.reports.push_back(r);
    const bool sign_ok =
        std::all_of(seq.values.begin(), seq.values.end(), [&](double v) {
          return family == SeriesFamily::LogMean ? v < 0.0 : v >= 0.0;
        });
    CheckReport signs;
    signs.relation = family == SeriesFamily::LogMean ? "all coefficients < 0" : "all coefficients >= 0";
    signs.subjects = {std::string(to_string(family))};
    signs.samples = seq.values.size();
    signs.verdict = sign_ok ? Verdict::Pass : Verdict::Fail;
    out_.reports.push_back(signs);
    switch (cfg_.format) {
      case Format::Text:
        for (std::size_t k = 0; k < seq.values.size(); ++k)
          out_.stream << fmt::format("n={:<4d} {:.15g}\n", seq.first_index + k, seq.values[k]);
        out_.stream << to_text(signs) << '\n' << to_text(r) << '\n';
        break;
      case Format::Json: {
        Json j;
        j["family"] = std::string(to_string(family));
        j["first_index"] = seq.first_index;
        j["coefficients"] = seq.values;
        j["signs"] = to_json(signs);
        j["partial_sum"] = to_json(r);
        out_.stream << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_.stream << "n,coefficient\n";
        for (std::size_t k = 0; k < seq.values.size(); ++k)
          out_.stream << seq.first_index + k << ',' << shortest(seq.values[k]) << '\n';
        break;
    }
  }

  void note_demo() {
    expect_args(0, 0);
    const NoteDemo demo = note_counterexample(cfg_.nx.value_or(400));
    // The demonstration succeeds when the inequality holds and f is not monotone.
    CheckReport non_monotone = demo.monotonicity;
    non_monotone.relation = "f is not monotone (witness t1 < t2, f(t1) > f(t2))";
    non_monotone.verdict = demo.monotonicity.verdict == Verdict::Fail ? Verdict::Pass : Verdict::Fail;
    out_.reports = {demo.inequality, non_monotone};
    const auto& w = demo.monotonicity.worst_point;
    switch (cfg_.format) {
      case Format::Text:
        out_.stream << demo.function_description << '\n'
                    << to_text(demo.inequality) << '\n'
                    << fmt::format("sup (y-x)/(2-x-y) on grid = {:.15g} (< 1/3)\n", demo.sup_complement_gap);
        if (w.size() == 2)
          out_.stream << fmt::format("non-monotone witness: f({:.15g}) = {:.15g} > f({:.15g}) = {:.15g}\n",
                                     w[0], note_function(w[0]), w[1], note_function(w[1]));
        break;
      case Format::Json: {
        Json j;
        j["function"] = demo.function_description;
        j["inequality"] = to_json(demo.inequality);
        j["monotonicity"] = to_json(demo.monotonicity);
        j["witness"] = w;
        j["sup_complement_gap"] = demo.sup_complement_gap;
        out_.stream << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_.stream << kReportCsvHeader << '\n'
                    << to_csv_row(demo.inequality) << '\n'
                    << to_csv_row(demo.monotonicity) << '\n';
        break;
    }
  }

  void catalog() {
    expect_args(0, 0);
    const auto means = list_means();
    switch (cfg_.format) {
      case Format::Text:
        out_.stream << "means:\n";
        for (const auto& m : means)
          out_.stream << fmt::format("  {:<8} {:<20} {}\n", m.id, to_string(m.kind), m.display_name);
        out_.stream << "seiffert functions:\n";
        for (const auto& s : builtin_seiffert()) out_.stream << "  " << s.id << '\n';
        out_.stream << "  a(r)\n";
        out_.stream << "chains:\n";
        for (const auto& p : chain_presets())
          out_.stream << fmt::format("  {:<16} {}\n", p.name, p.description);
        out_.stream << "derivative claims:\n";
        for (const auto& c : derivative_claims())
          out_.stream << fmt::format("  {:<20} {}\n", c.name, c.description);
        break;
      case Format::Json: {
        Json j;
        j["means"] = Json::array();
        for (const auto& m : means)
          j["means"].push_back(
              Json{{"id", m.id}, {"display_name", m.display_name}, {"kind", std::string(to_string(m.kind))}});
        j["seiffert"] = Json::array();
        for (const auto& s : builtin_seiffert()) j["seiffert"].push_back(s.id);
        j["seiffert"].push_back("a(r)");
        j["chains"] = Json::array();
        for (const auto& p : chain_presets()) j["chains"].push_back(p.name);
        j["derivative_claims"] = Json::array();
        for (const auto& c : derivative_claims()) j["derivative_claims"].push_back(c.name);
        out_.stream << j.dump(2) << '\n';
        break;
      }
      case Format::Csv:
        out_.stream << "id,kind,display_name\n";
        for (const auto& m : means)
          out_.stream << m.id << ',' << to_string(m.kind) << ',' << m.display_name << '\n';
        break;
    }
  }

  const RunConfig& cfg_;
  CheckOptions opts_;
  Output out_;
};

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Output result;
  try {
    result = Runner(config).execute();
  } catch (const ConfigError& e) {
    err << "kyfan: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const RegistryError& e) {
    err << "kyfan: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const DomainError& e) {
    err << "kyfan: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const InvariantError& e) {
    err << "kyfan: " << e.what() << '\n';
    return kExitCheckFailed;
  }
  if (config.out_path) {
    std::ofstream file(*config.out_path, std::ios::binary);
    if (!file) {
      err << "kyfan: cannot open '" << *config.out_path << "' for writing\n";
      return kExitIoError;
    }
    file << result.stream.str();
    if (!file.flush()) {
      err << "kyfan: write to '" << *config.out_path << "' failed\n";
      return kExitIoError;
    }
  } else {
    out << result.stream.str();
  }
  for (const auto& r : result.reports) {
    if (!r.passed()) {
      err << "kyfan: check failed: " << r.relation << '\n';
    }
  }
  return all_passed(result.reports) ? kExitPass : kExitCheckFailed;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grid checks of Ky Fan type inequalities between means"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text";

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--nx", cfg.nx, "grid points along x (or the 1-D point count)");
    sub->add_option("--ny", cfg.ny, "grid points along y");
    sub->add_option("--x-min", cfg.x_min);
    sub->add_option("--x-max", cfg.x_max);
    sub->add_option("--y-min", cfg.y_min);
    sub->add_option("--y-max", cfg.y_max);
    sub->add_option("--lo", cfg.lo, "1-D grid lower bound");
    sub->add_option("--hi", cfg.hi, "1-D grid upper bound");
    sub->add_flag("--exclude-diagonal", cfg.exclude_diagonal);
    sub->add_option("--tol", cfg.tol, "margin tolerance");
    sub->add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "write the report stream to a file");
  };

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"eval", "evaluate a mean: eval <mean> <x> <y>"},
      {"seiffert", "evaluate or validate a Seiffert function: seiffert <id> [z]"},
      {"check", "check <ratio|harmonic|q-increasing|g-decreasing> <M> <N>, "
                "check <ratio-monotone|diff-decreasing> <m> <n>, check roundtrip <M>, "
                "check sandwich <m>, check derivative <claim>"},
      {"chain", "verify a preset chain: chain <ns2003|ns2003-extended|harmonic-upper|harmonic-lower|all>"},
      {"series", "series <log-mean-series|artanh-tan-series|cosh>"},
      {"note-demo", "non-monotone function satisfying the sufficient inequality"},
      {"catalog", "list means, Seiffert functions, chains and derivative claims"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_common(sub);
    sub->add_option("args", cfg.args)->allow_extra_args();
    if (std::string_view(s.name) == "series") {
      sub->add_option("--terms", cfg.terms, "partial-sum length");
      sub->add_option("--n-max", cfg.n_max, "largest coefficient index to print");
    }
    sub->callback([&cfg, name = s.name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg, help;
    const int code = app.exit(e, msg, help);
    out << msg.str();
    err << help.str();
    return code == 0 ? kExitPass : kExitConfigError;
  }
  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (const char* env = std::getenv("KYFAN_DEFAULT_GRID"); env && *env) cfg.default_grid_env = env;
  return run(cfg, out, err);
}

}  // namespace kyfan::cli
