#include "gpc_cli/cli.h"

#include <CLI11.hpp>

#include "commands.h"
#include "gpc/error.h"

namespace gpc::cli {
namespace {

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonPrimeDimension:
    case ErrorCode::kIndexOutOfRange:
    case ErrorCode::kInvalidDistribution:
    case ErrorCode::kInvalidState:
    case ErrorCode::kNonHermitianInput:
    case ErrorCode::kOutOfTableRange:
    case ErrorCode::kUnsupportedFamily:
    case ErrorCode::kStepTooLarge:
    case ErrorCode::kParseError:
      return true;
    default:
      return false;
  }
}

void add_common(CLI::App* sub, RunConfig& cfg, bool mixture) {
  sub->add_option("--dim", cfg.d, "prime dimension d")->required();
  if (mixture) {
    sub->add_option("--weights", cfg.weights, "d+1 mixing weights, fractions allowed")
        ->required();
    sub->add_option("--lambda", cfg.lambda, "eigenvalue function, e.g. cos:omega=1")
        ->required();
  }
  sub->add_option("--t-max", cfg.t_max, "window end");
  sub->add_option("--step", cfg.step, "grid step");
  sub->add_option("--out", cfg.out, "output table path");
  sub->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::kCsv}, {"json", Format::kJson}}));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Mixtures of generalized Pauli dynamical maps", "gpc"};
  app.require_subcommand(1);
  int precision = 0;
  app.add_option("--precision", precision, "significant digits (overrides GPC_PRECISION)")
      ->check(CLI::Range(1, 17));

  auto* mubs = app.add_subcommand("mubs", "build and verify the MUBs for prime d");
  mubs->add_option("--dim", cfg.d, "prime dimension d")->required();

  auto* mix = app.add_subcommand("mix", "mixture eigenvalues and singularity report");
  add_common(mix, cfg, true);

  auto* gen = app.add_subcommand("generator", "time-local decoherence rates");
  add_common(gen, cfg, true);

  auto* kernel = app.add_subcommand("kernel", "memory kernel eigenvalues");
  add_common(kernel, cfg, false);
  kernel->add_option("--family", cfg.family, "cos, expcos or semigroup-mix");
  kernel->add_option("--omega", cfg.omega);
  kernel->add_option("--Z", cfg.z);
  kernel->add_option("--r", cfg.r);
  kernel->add_option("--x", cfg.x, "slot weight, or d+1 weights");
  kernel->add_option("--spec", cfg.spec, "kernel:family=...,<params>,x=...");
  kernel->add_flag("--solve", cfg.solve, "solve the Volterra equation and report the error");

  auto* example = app.add_subcommand("example", "reproduce a worked example");
  example->add_option("--id", cfg.example_id, "example number")
      ->required()
      ->check(CLI::Range(1, 7));
  example->add_option("--out", cfg.out, "output table path");
  example->add_option("--format", cfg.format, "csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"csv", Format::kCsv}, {"json", Format::kJson}}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.precision = precision > 0 ? precision : precision_from_env();
    if (mubs->parsed()) return cmd_mubs(cfg, out);
    if (mix->parsed()) return cmd_mix(cfg, out);
    if (gen->parsed()) return cmd_generator(cfg, out);
    if (kernel->parsed()) return cmd_kernel(cfg, out);
    return cmd_example(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitVerification;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace gpc::cli
