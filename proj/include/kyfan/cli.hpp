#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kyfan::cli {

enum class Format { Text, Json, Csv };

/// Exit statuses of the command-line front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kExitIoError = 3;

struct RunConfig {
  std::string command;  // eval | seiffert | check | chain | series | note-demo | catalog
  std::vector<std::string> args;
  std::optional<std::size_t> nx, ny;
  std::optional<double> x_min, x_max, y_min, y_max;
  std::optional<double> lo, hi;
  std::optional<double> tol;
  std::optional<std::size_t> terms;
  std::optional<std::size_t> n_max;
  bool exclude_diagonal = false;
  Format format = Format::Text;
  std::optional<std::string> out_path;
  /// Value of KYFAN_DEFAULT_GRID, if set: "N" or "NxM".
  std::optional<std::string> default_grid_env;
};

/// Runs one command, writing the report stream to `out` (or to
/// config.out_path) and diagnostics to `err`. Returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (CLI11) and runs; reads KYFAN_DEFAULT_GRID from the environment.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace kyfan::cli
