#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "gpc_cli/cli.h"

namespace gpc::cli {
namespace {

namespace fs = std::filesystem;
using std::numbers::pi;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gpc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    old_ = fs::current_path();
    fs::current_path(dir_);
    unsetenv("GPC_PRECISION");
  }
  void TearDown() override {
    fs::current_path(old_);
    fs::remove_all(dir_);
    unsetenv("GPC_PRECISION");
  }

  int gpc(std::vector<std::string> args) {
    args.insert(args.begin(), "gpc");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static nlohmann::json report(const fs::path& p) { return nlohmann::json::parse(slurp(p)); }

  // rows of a CSV as strings, header dropped
  static std::vector<std::vector<std::string>> rows(const fs::path& p) {
    std::ifstream in(p);
    std::string line;
    std::getline(in, line);
    std::vector<std::vector<std::string>> out;
    while (std::getline(in, line)) {
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      out.push_back(cells);
    }
    return out;
  }

  fs::path dir_, old_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, Mubs) {
  EXPECT_EQ(gpc({"mubs", "--dim", "3"}), kExitOk);
  EXPECT_NE(out_.str().find("PASS"), std::string::npos);
  EXPECT_EQ(gpc({"mubs", "--dim", "4"}), kExitUsage);
  EXPECT_NE(err_.str().find("dimension must be prime"), std::string::npos);
  EXPECT_EQ(gpc({"mubs", "--dim", "7"}), kExitOk);
  EXPECT_EQ(gpc({"mubs"}), kExitUsage);
  EXPECT_EQ(gpc({"frobnicate"}), kExitUsage);
}

TEST_F(CliTest, MixRootsInSidecar) {
  ASSERT_EQ(gpc({"mix", "--dim", "2", "--weights", "1/3,1/3,1/3", "--lambda", "cos:omega=1",
                 "--t-max", "7", "--step", "0.001"}),
            kExitOk);
  EXPECT_EQ(slurp("mix.csv").substr(0, 28), "t,lambda_1,lambda_2,lambda_3");
  EXPECT_EQ(rows("mix.csv").size(), 7001u);
  const auto rep = report("mix.report.json");
  EXPECT_EQ(rep["verdict"], "non-invertible");
  for (const auto& slot : rep["roots"]) {
    ASSERT_EQ(slot.size(), 2u);
    EXPECT_NEAR(slot[0]["t"].get<double>(), 2 * pi / 3, 1e-6);
    EXPECT_NEAR(slot[1]["t"].get<double>(), 4 * pi / 3, 1e-6);
  }
}

TEST_F(CliTest, MixSemigroupColumns) {
  ASSERT_EQ(gpc({"mix", "--dim", "3", "--weights", "0.25,0.25,0.25,0.25", "--lambda",
                 "semigroup-mix:r=1", "--t-max", "5"}),
            kExitOk);
  for (const auto& row : rows("mix.csv")) {
    const double t = std::stod(row[0]);
    for (int a = 1; a <= 4; ++a) EXPECT_NEAR(std::stod(row[a]), std::exp(-t), 1e-11);
  }
  EXPECT_EQ(report("mix.report.json")["verdict"], "invertible");
}

TEST_F(CliTest, MixDegenerateWeights) {
  ASSERT_EQ(gpc({"mix", "--dim", "2", "--weights", "1,0,0", "--lambda", "cos:omega=1"}),
            kExitOk);
  EXPECT_EQ(report("mix.report.json")["verdict"], "non-invertible (zero weight)");
}

TEST_F(CliTest, MixBadInput) {
  EXPECT_EQ(gpc({"mix", "--dim", "2", "--weights", "0.5,0.5,0.5", "--lambda", "cos:omega=1"}),
            kExitUsage);
  EXPECT_EQ(gpc({"mix", "--dim", "2", "--weights", "1/3,1/3", "--lambda", "cos:omega=1"}),
            kExitUsage);
  EXPECT_EQ(gpc({"mix", "--dim", "2", "--weights", "1/3,1/3,x", "--lambda", "cos:omega=1"}),
            kExitUsage);
  EXPECT_EQ(gpc({"mix", "--dim", "2", "--weights", "1/3,1/3,1/3", "--lambda", "sin:omega=1"}),
            kExitUsage);
  EXPECT_EQ(gpc({"mix", "--dim", "2", "--weights", "1/3,1/3,1/3", "--lambda", "cos:omega=1",
                 "--t-max", "1", "--step", "0.5"}),
            kExitUsage);
  // decimal weights need to hit the simplex within 1e-9
  EXPECT_EQ(gpc({"mix", "--dim", "2", "--weights", "0.333,0.333,0.334", "--lambda",
                 "cos:omega=1"}),
            kExitOk);
}

TEST_F(CliTest, MixJsonFormat) {
  ASSERT_EQ(gpc({"mix", "--dim", "2", "--weights", "1/3,1/3,1/3", "--lambda", "cos:omega=1",
                 "--t-max", "1", "--step", "0.1", "--format", "json"}),
            kExitOk);
  const auto doc = report("mix.json");
  EXPECT_EQ(doc["columns"].size(), 4u);
  EXPECT_EQ(doc["rows"].size(), 11u);
  EXPECT_TRUE(fs::exists("mix.report.json"));
}

TEST_F(CliTest, GeneratorSemigroupRates) {
  ASSERT_EQ(gpc({"generator", "--dim", "2", "--weights", "1/3,1/3,1/3", "--lambda",
                 "semigroup-mix:r=1", "--t-max", "3"}),
            kExitOk);
  for (const auto& row : rows("generator.csv"))
    for (int a = 1; a <= 3; ++a) EXPECT_NEAR(std::stod(row[a]), 0.5, 1e-9);
  EXPECT_EQ(report("generator.report.json")["regularity"], "regular");
}

TEST_F(CliTest, GeneratorSingleComponentTan) {
  ASSERT_EQ(gpc({"generator", "--dim", "2", "--weights", "1,0,0", "--lambda", "cos:omega=1",
                 "--t-max", "0.785398163397448", "--step", "0.0785398163397448"}),
            kExitOk);
  const auto r = rows("generator.csv");
  ASSERT_EQ(r.size(), 11u);
  EXPECT_NEAR(std::stod(r.back()[1]), 1.0, 1e-9);
}

TEST_F(CliTest, GeneratorInfTokens) {
  ASSERT_EQ(gpc({"generator", "--dim", "2", "--weights", "1/3,1/3,1/3", "--lambda",
                 "cos:omega=1", "--t-max", "3"}),
            kExitOk);
  const std::string csv = slurp("generator.csv");
  EXPECT_NE(csv.find(",inf"), std::string::npos);
  const auto rep = report("generator.report.json");
  EXPECT_EQ(rep["regularity"], "singular");
  EXPECT_NEAR(rep["singular_at"][0].get<double>(), 2 * pi / 3, 1e-9);
}

TEST_F(CliTest, KernelSolve) {
  ASSERT_EQ(gpc({"kernel", "--family", "cos", "--omega", "1", "--dim", "2", "--x",
                 "0.3333333333", "--solve"}),
            kExitOk);
  EXPECT_LE(report("kernel.report.json")["solve"]["max_abs_error"].get<double>(), 5e-4);
}

TEST_F(CliTest, KernelSemigroupDelta) {
  ASSERT_EQ(gpc({"kernel", "--family", "semigroup-mix", "--r", "1", "--dim", "3", "--x",
                 "0.25"}),
            kExitOk);
  EXPECT_EQ(report("kernel.report.json")["delta_coeff"][0].get<double>(), -1.0);
  for (const auto& row : rows("kernel.csv")) EXPECT_EQ(std::stod(row[1]), 0.0);
}

TEST_F(CliTest, KernelOscillation) {
  ASSERT_EQ(gpc({"kernel", "--family", "expcos", "--Z", "0.2206", "--omega", "1", "--dim",
                 "3", "--x", "0.3333"}),
            kExitOk);
  EXPECT_TRUE(report("kernel.report.json")["oscillating"][0].get<bool>());
  // sign changes in the regular part
  int changes = 0;
  double prev = 0.0;
  for (const auto& row : rows("kernel.csv")) {
    const double v = std::stod(row[1]);
    if (prev * v < 0.0) ++changes;
    prev = v;
  }
  EXPECT_GE(changes, 2);
}

TEST_F(CliTest, KernelSpecAndErrors) {
  EXPECT_EQ(gpc({"kernel", "--dim", "2", "--spec", "kernel:family=cos,omega=2,x=1/2"}),
            kExitUsage);  // x must be a plain number in the spec grammar
  EXPECT_EQ(gpc({"kernel", "--dim", "2", "--spec", "kernel:family=cos,omega=2,x=0.5"}),
            kExitOk);
  EXPECT_EQ(gpc({"kernel", "--dim", "2", "--family", "exp", "--r", "1", "--x", "0.5"}),
            kExitUsage);
  EXPECT_EQ(gpc({"kernel", "--dim", "2", "--family", "cos", "--x", "0.5"}), kExitUsage);
  EXPECT_EQ(gpc({"kernel", "--dim", "2", "--family", "cos", "--omega", "1", "--x", "1.5"}),
            kExitUsage);
  ASSERT_EQ(gpc({"kernel", "--dim", "2", "--family", "cos", "--omega", "1", "--x",
                 "1/3,1/3,1/3"}),
            kExitOk);
  EXPECT_EQ(slurp("kernel.csv").substr(0, 38), "t,kappa_reg_1,kappa_reg_2,kappa_reg_3\n");
}

TEST_F(CliTest, Examples) {
  ASSERT_EQ(gpc({"example", "--id", "3"}), kExitOk);
  const std::string check = slurp("example_3.check.txt");
  EXPECT_NE(check.find("PASS first mixture root"), std::string::npos);
  EXPECT_EQ(check.find("FAIL"), std::string::npos);

  ASSERT_EQ(gpc({"example", "--id", "5"}), kExitOk);
  EXPECT_NE(slurp("example_5.check.txt").find("PASS max |lambda_a - exp(-t)|"),
            std::string::npos);

  ASSERT_EQ(gpc({"example", "--id", "7"}), kExitOk);
  const auto rep = report("example_7.report.json");
  EXPECT_TRUE(rep.contains("erratum"));
  for (const auto& c : rep["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];

  EXPECT_EQ(gpc({"example", "--id", "8"}), kExitUsage);
}

TEST_F(CliTest, AllExamplesPass) {
  for (int id = 1; id <= 7; ++id) {
    EXPECT_EQ(gpc({"example", "--id", std::to_string(id)}), kExitOk) << id << out_.str();
    EXPECT_TRUE(fs::exists("example_" + std::to_string(id) + ".csv"));
  }
}

TEST_F(CliTest, Deterministic) {
  const std::vector<std::string> args{"mix", "--dim", "3", "--weights", "0.1,0.2,0.3,0.4",
                                      "--lambda", "expcos:Z=0.3,omega=1.2", "--t-max", "4"};
  ASSERT_EQ(gpc(args), kExitOk);
  const std::string a = slurp("mix.csv"), ra = slurp("mix.report.json");
  ASSERT_EQ(gpc(args), kExitOk);
  EXPECT_EQ(a, slurp("mix.csv"));
  EXPECT_EQ(ra, slurp("mix.report.json"));
}

TEST_F(CliTest, Precision) {
  const std::vector<std::string> args{"mix", "--dim", "2", "--weights", "1/3,1/3,1/3",
                                      "--lambda", "cos:omega=1", "--t-max", "1", "--step", "0.1"};
  ASSERT_EQ(gpc(args), kExitOk);
  EXPECT_EQ(rows("mix.csv")[1][1], "0.996669443519");
  setenv("GPC_PRECISION", "5", 1);
  ASSERT_EQ(gpc(args), kExitOk);
  EXPECT_EQ(rows("mix.csv")[1][1], "0.99667");
  std::vector<std::string> flagged{"--precision", "3"};
  flagged.insert(flagged.end(), args.begin(), args.end());
  ASSERT_EQ(gpc(flagged), kExitOk);
  EXPECT_EQ(rows("mix.csv")[1][1], "0.997");
  setenv("GPC_PRECISION", "zero", 1);
  EXPECT_EQ(gpc(args), kExitUsage);
}

}  // namespace
}  // namespace gpc::cli
