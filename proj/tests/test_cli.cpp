#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "kyfan/cli.hpp"
#include "kyfan/output.hpp"

using namespace kyfan;
using cli::RunConfig;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(RunConfig cfg) {
  std::ostringstream out, err;
  const int code = cli::run(cfg, out, err);
  return {code, out.str(), err.str()};
}

RunConfig command(std::string name, std::vector<std::string> args = {}) {
  RunConfig cfg;
  cfg.command = std::move(name);
  cfg.args = std::move(args);
  return cfg;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(Cli, Eval) {
  const auto r = run(command("eval", {"A", "0.1", "0.4"}));
  EXPECT_EQ(r.code, cli::kExitPass);
  EXPECT_EQ(r.out, "0.25\n");
  EXPECT_EQ(run(command("eval", {"Ar(1/2)", "1", "4"})).out, "2.25\n");
}

TEST(Cli, ChainJson) {
  auto cfg = command("chain", {"ns2003"});
  cfg.format = cli::Format::Json;
  cfg.nx = cfg.ny = 60;
  const auto r = run(cfg);
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["chain"], "ns2003");
  EXPECT_EQ(j["verdict"], "pass");
  ASSERT_EQ(j["reports"].size(), 5u);
  for (const auto& rep : j["reports"]) {
    EXPECT_EQ(rep["verdict"], "pass");
    EXPECT_EQ(rep["samples"], 3600);
    EXPECT_GE(rep["worst_margin"].get<double>(), -1e-12);
  }
  EXPECT_EQ(j["reports"][0]["means"], Json::array({"G", "L"}));
}

TEST(Cli, FailingCheckExitsOne) {
  auto cfg = command("check", {"ratio", "A", "G"});
  cfg.nx = cfg.ny = 20;
  const auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kExitCheckFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, NoteDemo) {
  auto cfg = command("note-demo");
  cfg.nx = 100;
  const auto r = run(cfg);
  EXPECT_EQ(r.code, cli::kExitPass) << r.err;
  EXPECT_NE(r.out.find("non-monotone witness"), std::string::npos);
}

TEST(Cli, SurfaceCsv) {
  auto cfg = command("check", {"ratio", "G", "A"});
  cfg.format = cli::Format::Csv;
  cfg.nx = 7;
  cfg.ny = 5;
  const auto r = run(cfg);
  ASSERT_EQ(r.code, cli::kExitPass) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 1u + 35u);
  EXPECT_EQ(ls[0], "x,y,lhs,rhs,margin");
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const double margin = std::stod(ls[i].substr(ls[i].rfind(',') + 1));
    EXPECT_GE(margin, 0.0) << ls[i];
  }

  cfg.args = {"ratio", "NS", "NS"};
  for (const auto& l : lines(run(cfg).out))
    if (l[0] != 'x') EXPECT_EQ(l.substr(l.rfind(',') + 1), "0") << l;
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run(command("eval", {"Nope", "1", "2"})).code, cli::kExitConfigError);
  EXPECT_EQ(run(command("eval", {"A", "-1", "2"})).code, cli::kExitConfigError);
  EXPECT_EQ(run(command("frobnicate")).code, cli::kExitConfigError);
  auto cfg = command("check", {"ratio", "G", "A"});
  cfg.x_max = 0.9;
  EXPECT_EQ(run(cfg).code, cli::kExitConfigError);
  auto bad_env = command("chain", {"ns2003"});
  bad_env.default_grid_env = "lots";
  EXPECT_EQ(run(bad_env).code, cli::kExitConfigError);
}

TEST(Cli, UnwritableOutputExitsThree) {
  auto cfg = command("eval", {"A", "1", "2"});
  cfg.out_path = "/nonexistent-dir/out.txt";
  EXPECT_EQ(run(cfg).code, cli::kExitIoError);
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "kyfan_cli_test.txt";
  auto cfg = command("eval", {"G", "1", "4"});
  cfg.out_path = path.string();
  ASSERT_EQ(run(cfg).code, cli::kExitPass);
  std::ifstream in(path);
  std::string content((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(content, "2\n");
  std::filesystem::remove(path);
}

TEST(Cli, EnvGridAndOverride) {
  auto cfg = command("check", {"ratio", "G", "A"});
  cfg.format = cli::Format::Json;
  cfg.default_grid_env = "30x20";
  EXPECT_EQ(Json::parse(run(cfg).out)["samples"], 600);
  cfg.default_grid_env = "25";
  EXPECT_EQ(Json::parse(run(cfg).out)["samples"], 625);
  cfg.nx = 10;
  EXPECT_EQ(Json::parse(run(cfg).out)["samples"], 250);
}

TEST(Cli, ByteIdenticalReruns) {
  auto cfg = command("chain", {"harmonic-lower"});
  cfg.format = cli::Format::Json;
  cfg.nx = cfg.ny = 40;
  const auto a = run(cfg), b = run(cfg);
  EXPECT_EQ(a.code, cli::kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ArgvFrontEnd) {
  const char* argv[] = {"kyfan", "eval", "H", "1", "3"};
  std::ostringstream out, err;
  EXPECT_EQ(cli::main(5, const_cast<char**>(argv), out, err), cli::kExitPass);
  EXPECT_EQ(out.str(), "1.5\n");
  const char* bad[] = {"kyfan", "eval", "A", "1", "2", "--nx", "many"};
  std::ostringstream o2, e2;
  EXPECT_EQ(cli::main(7, const_cast<char**>(bad), o2, e2), cli::kExitConfigError);
}

TEST(Cli, SeriesAndCatalog) {
  auto cfg = command("series", {"artanh-tan-series"});
  cfg.n_max = 10;
  EXPECT_EQ(run(cfg).code, cli::kExitPass);
  cfg = command("series", {"cosh"});
  EXPECT_EQ(run(cfg).code, cli::kExitPass);
  const auto cat = run(command("catalog"));
  EXPECT_EQ(cat.code, cli::kExitPass);
  EXPECT_NE(cat.out.find("Stanh"), std::string::npos);
  EXPECT_NE(cat.out.find("Ar(r)"), std::string::npos);
}
