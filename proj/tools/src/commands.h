#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "output.h"

namespace gpc::cli {

struct RunConfig {
  std::string subcommand;
  int d = 2;
  std::string weights;
  std::string lambda;
  double t_max = 10.0;
  double step = 1e-3;
  std::filesystem::path out;
  Format format = Format::kCsv;
  int precision = kDefaultPrecision;

  // kernel
  std::string family;
  std::string omega, z, r;
  std::string x;
  std::string spec;
  bool solve = false;

  // example
  int example_id = 0;
};

int cmd_mubs(const RunConfig& cfg, std::ostream& out);
int cmd_mix(const RunConfig& cfg, std::ostream& out);
int cmd_generator(const RunConfig& cfg, std::ostream& out);
int cmd_kernel(const RunConfig& cfg, std::ostream& out);
int cmd_example(const RunConfig& cfg, std::ostream& out);

struct ExampleOutput {
  Table table;
  Json report;
  std::vector<Check> checks;
};

ExampleOutput run_example(int id, int precision);

}  // namespace gpc::cli
