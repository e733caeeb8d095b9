#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>
#include <string>
#include <vector>

#include "mrhweno/config.hpp"

using namespace mrhweno;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "mrhweno");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cli, ParsesFlags) {
  const char* argv[] = {"mrhweno", "--problem", "lax", "--scheme", "m5-ni", "--nx", "50",
                        "--cfl", "0.4", "--grids", "10,20", "--characteristic"};
  const RunConfig c = parse_config(12, argv);
  EXPECT_EQ(c.problem, "lax");
  EXPECT_EQ(c.scheme, "m5-ni");
  EXPECT_EQ(c.nx, 50);
  EXPECT_EQ(c.cfl, 0.4);
  EXPECT_EQ(c.grids, (std::vector<int>{10, 20}));
  EXPECT_TRUE(c.characteristic);
  EXPECT_TRUE(std::isnan(c.gamma));
  const SchemeOptions o = scheme_options(c);
  EXPECT_EQ(o.scheme, Scheme::m5_ni);
  EXPECT_EQ(o.cfl, 0.4);
}

TEST(Cli, ConfigurationErrorsExitWithTwo) {
  EXPECT_EQ(invoke({}).code, exit_config);
  const CliResult unknown = invoke({"--problem", "sod"});
  EXPECT_EQ(unknown.code, exit_config);
  EXPECT_NE(unknown.err.find("configuration error"), std::string::npos);
  EXPECT_EQ(invoke({"--problem", "lax", "--scheme", "weno5"}).code, exit_config);
  EXPECT_EQ(invoke({"--problem", "lax", "--nx", "-3"}).code, exit_config);
  EXPECT_EQ(invoke({"--problem", "sedov", "--nx", "400"}).code, exit_config);
  EXPECT_EQ(invoke({"--problem", "euler-smooth-1d", "--gamma", "1.4"}).code, exit_config);
  EXPECT_EQ(invoke({"--problem", "lax", "--bogus"}).code, exit_config);
}

TEST(Cli, HelpExitsCleanly) {
  const CliResult r = invoke({"--help"});
  EXPECT_EQ(r.code, exit_ok);
  EXPECT_NE(r.out.find("--problem"), std::string::npos);
}

TEST(Cli, ConfigFileWithComments) {
  const auto dir = scratch("mrhweno_cli_cfg");
  std::filesystem::create_directories(dir);
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# coarse Burgers run\nproblem = burgers1d\nnx = 20\n# scheme\nscheme = m5-i\n";
  const char* argv[] = {"mrhweno", "--config", nullptr, "--nx", "30"};
  const std::string path = cfg.string();
  argv[2] = path.c_str();
  const RunConfig c = parse_config(5, argv);
  EXPECT_EQ(c.problem, "burgers1d");
  EXPECT_EQ(c.nx, 30);
  std::ofstream(cfg) << "problem = burgers1d\nunknown_key = 3\n";
  EXPECT_EQ(invoke({"--config", path}).code, exit_config);
  std::filesystem::remove_all(dir);
}

TEST(Cli, BurgersRunWritesOutputs) {
  const auto dir = scratch("mrhweno_cli_run");
  const CliResult r = invoke({"--problem", "burgers1d", "--nx", "80", "--out", dir.string()});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  EXPECT_NE(r.out.find("L1 error"), std::string::npos);
  EXPECT_NE(r.out.find("max troubled fraction 0.0000"), std::string::npos);
  const auto rows = read_columns((dir / "solution.dat").string());
  ASSERT_EQ(rows.size(), 80u);
  EXPECT_EQ(rows[0].size(), 5u);
  EXPECT_TRUE(std::filesystem::exists(dir / "troubled.dat"));
  const auto table = read_columns((dir / "table.dat").string());
  ASSERT_EQ(table.size(), 1u);
  EXPECT_EQ(table[0][0], 80.0);
  EXPECT_LT(table[0][1], 1e-5);
  std::filesystem::remove_all(dir);
}

TEST(Cli, ConvergenceTable) {
  const auto dir = scratch("mrhweno_cli_table");
  const CliResult r =
      invoke({"--problem", "burgers1d", "--grids", "40,80", "--accuracy", "--out", dir.string()});
  ASSERT_EQ(r.code, exit_ok) << r.err;
  const auto table = read_columns((dir / "table.dat").string());
  ASSERT_EQ(table.size(), 2u);
  ASSERT_EQ(table[1].size(), 5u);
  EXPECT_GT(table[1][2], 5.0);
  std::filesystem::remove_all(dir);
}

TEST(Cli, AdmissibilityFailureExitsWithThree) {
  // A Burgers problem cannot fail; a blast run with an oversized CFL number loses positivity.
  const CliResult r = invoke({"--problem", "blast", "--nx", "100", "--cfl", "5"});
  EXPECT_EQ(r.code, exit_admissibility);
  EXPECT_NE(r.err.find("admissibility failure"), std::string::npos);
}

TEST(Cli, BinaryRuns) {
  const std::string cmd = std::string(MRHWENO_CLI_PATH) + " --problem lax --nx 40 > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  const std::string bad = std::string(MRHWENO_CLI_PATH) + " --problem nope 2> /dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), exit_config);
}
