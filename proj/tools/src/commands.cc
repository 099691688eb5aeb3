#include "commands.h"

#include <algorithm>
#include <cmath>

#include "gpc/gpc.h"
#include "gpc_cli/cli.h"

namespace gpc::cli {
namespace {

std::filesystem::path output_path(const RunConfig& cfg, const std::string& base) {
  if (!cfg.out.empty()) return cfg.out;
  return base + (cfg.format == Format::kJson ? ".json" : ".csv");
}

MixtureSpec mixture_from(const RunConfig& cfg) {
  if (cfg.weights.empty()) throw Error(ErrorCode::kParseError, "--weights is required");
  if (cfg.lambda.empty()) throw Error(ErrorCode::kParseError, "--lambda is required");
  const Dim d(cfg.d);
  return MixtureSpec(d, parse_weights(cfg.weights), EigenFunction::parse(cfg.lambda, d), 1e-9);
}

std::vector<std::string> slot_columns(const std::string& prefix, int slots) {
  std::vector<std::string> out{"t"};
  for (int a = 1; a <= slots; ++a) out.push_back(prefix + "_" + std::to_string(a));
  return out;
}

Json roots_json(const std::vector<Root>& roots, int precision) {
  Json out = Json::array();
  for (const Root& r : roots) {
    out.push_back({{"t", number_json(r.t, precision)}, {"tangential", r.tangential}});
  }
  return out;
}

void finish(const RunConfig& cfg, const std::filesystem::path& path, const Table& table,
            Json report, std::ostream& out) {
  write_table(table, path, cfg.format, cfg.precision);
  write_json(report, sidecar_path(path));
  out << "wrote " << path.string() << " and " << sidecar_path(path).string() << '\n';
}

}  // namespace

int cmd_mubs(const RunConfig& cfg, std::ostream& out) {
  const Dim d(cfg.d);
  const MubFamily mubs = build_mubs(d);
  const double dev = mubs.max_deviation();
  const bool ok = dev <= kAlgebraTol;
  out << "d=" << d.value() << " bases=" << mubs.bases().size()
      << " max deviation " << format_number(dev, 3) << (ok ? " <= " : " > ") << "1e-12"
      << (ok ? " PASS" : " FAIL") << '\n';
  return ok ? kExitOk : kExitVerification;
}

int cmd_mix(const RunConfig& cfg, std::ostream& out) {
  const MixtureSpec m = mixture_from(cfg);
  const TimeGrid grid(cfg.t_max, cfg.step);
  const int slots = m.dim().slots();

  Table table{slot_columns("lambda", slots), {}};
  table.rows.reserve(grid.size());
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double t = grid.at(n);
    std::vector<double> row{t};
    for (double v : mixture_eigenvalues(m, t)) row.push_back(v);
    table.rows.push_back(std::move(row));
  }

  const SingularityReport rep = find_singularities(m, grid.t_max(), grid.step());
  const int p = cfg.precision;
  Json report;
  report["command"] = "mix";
  report["d"] = m.dim().value();
  report["weights"] = numbers_json(m.weights(), p);
  report["lambda"] = m.function().describe();
  report["t_max"] = number_json(grid.t_max(), p);
  report["step"] = number_json(grid.step(), p);
  report["verdict"] = to_string(rep.verdict);
  report["threshold"] = {{"value", number_json(rep.threshold.value, p)},
                         {"forced_non_invertible", rep.threshold.forced_non_invertible}};
  report["lambda_min"] = number_json(rep.lambda_min, p);
  Json slot_roots = Json::array();
  for (const auto& r : rep.slot_roots) slot_roots.push_back(roots_json(r, p));
  report["roots"] = std::move(slot_roots);
  report["component_roots"] = roots_json(rep.component_roots, p);
  Json shifts = Json::array();
  for (const auto& s : rep.shifts) {
    shifts.push_back({{"component_root", number_json(s.component_root, p)},
                      {"mixture_root", number_json(s.mixture_root, p)},
                      {"shift", number_json(s.shift, p)}});
  }
  report["shifts"] = std::move(shifts);

  out << "verdict: " << to_string(rep.verdict) << '\n';
  for (int a = 0; a < slots; ++a) {
    for (const Root& r : rep.slot_roots[a]) {
      out << "  lambda_" << a + 1 << " root at t=" << format_number(r.t, p)
          << (r.tangential ? " (tangential)" : "") << '\n';
    }
  }
  finish(cfg, output_path(cfg, "mix"), table, std::move(report), out);
  return kExitOk;
}

int cmd_generator(const RunConfig& cfg, std::ostream& out) {
  const MixtureSpec m = mixture_from(cfg);
  const TimeGrid grid(cfg.t_max, cfg.step);
  const int slots = m.dim().slots();

  // singular times go into the grid so the markers show up in the table
  std::vector<double> times;
  times.reserve(grid.size());
  for (std::size_t n = 0; n < grid.size(); ++n) times.push_back(grid.at(n));
  const SingularityReport rep = find_singularities(m, grid.t_max(), grid.step());
  for (const auto& roots : rep.slot_roots)
    for (const Root& r : roots) times.push_back(r.t);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(),
                          [](double a, double b) { return std::abs(a - b) <= 1e-12; }),
              times.end());

  Table table{slot_columns("gamma", slots), {}};
  table.rows.reserve(times.size());
  for (double t : times) {
    std::vector<double> row{t};
    for (double g : mixture_rates_closed_form(m, t)) row.push_back(g);
    table.rows.push_back(std::move(row));
  }

  const RegularityVerdict v = regularity_scan(m, grid.t_max(), grid.step());
  const int p = cfg.precision;
  Json report;
  report["command"] = "generator";
  report["d"] = m.dim().value();
  report["weights"] = numbers_json(m.weights(), p);
  report["lambda"] = m.function().describe();
  report["t_max"] = number_json(grid.t_max(), p);
  report["step"] = number_json(grid.step(), p);
  report["regularity"] = to_string(v.kind);
  report["singular_at"] = numbers_json(v.singular_at, p);
  report["indeterminate_at"] = numbers_json(v.indeterminate_at, p);
  report["forced_non_invertible"] = v.forced_non_invertible;

  out << "generator: " << to_string(v.kind) << '\n';
  for (double t : v.singular_at) out << "  singular at t=" << format_number(t, p) << '\n';
  finish(cfg, output_path(cfg, "generator"), table, std::move(report), out);
  return kExitOk;
}

int cmd_kernel(const RunConfig& cfg, std::ostream& out) {
  const Dim d(cfg.d);
  EigenFunction f = EigenFunction::exp(1.0);
  std::vector<double> xs;
  if (!cfg.spec.empty()) {
    KernelSpec ks = parse_kernel_spec(cfg.spec, d);
    f = std::move(ks.function);
    xs = {ks.x};
  } else {
    if (cfg.family.empty()) throw Error(ErrorCode::kParseError, "--family or --spec required");
    if (cfg.family != "cos" && cfg.family != "expcos" && cfg.family != "semigroup-mix") {
      throw Error(ErrorCode::kUnsupportedFamily,
                  "kernel family must be cos, expcos or semigroup-mix");
    }
    std::string params;
    auto add = [&](const char* key, const std::string& v) {
      if (v.empty()) return;
      params += (params.empty() ? "" : ",") + std::string(key) + "=" + v;
    };
    add("Z", cfg.z);
    add("omega", cfg.omega);
    add("r", cfg.r);
    f = EigenFunction::parse(cfg.family + ":" + params, d);
    if (cfg.x.empty()) throw Error(ErrorCode::kParseError, "--x is required");
    xs = parse_weights(cfg.x);
  }
  if (xs.size() > 1) {
    MixtureSpec(d, xs, f, 1e-9);  // validates the simplex
  } else if (!(xs[0] >= 0.0 && xs[0] <= 1.0)) {
    throw Error(ErrorCode::kParseError, "x must lie in [0, 1]");
  }

  std::vector<Kernel> kernels;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    kernels.push_back(mixture_kernel_slot(f, xs[a], d, xs.size() > 1 ? int(a) + 1 : 0));
  }
  const TimeGrid grid(cfg.t_max, cfg.step);
  Table table;
  table.columns = xs.size() > 1 ? slot_columns("kappa_reg", int(xs.size()))
                                : std::vector<std::string>{"t", "kappa_reg"};
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double t = grid.at(n);
    std::vector<double> row{t};
    for (const Kernel& k : kernels) row.push_back(k.regular(t));
    table.rows.push_back(std::move(row));
  }

  const int p = cfg.precision;
  Json report;
  report["command"] = "kernel";
  report["d"] = d.value();
  report["lambda"] = f.describe();
  report["x"] = numbers_json(xs, p);
  std::vector<double> deltas;
  for (const Kernel& k : kernels) deltas.push_back(k.delta_coeff);
  report["delta_coeff"] = numbers_json(deltas, p);
  if (const auto* e = std::get_if<family::ExpCos>(&f.family())) {
    Json osc = Json::array();
    for (double x : xs) osc.push_back(oscillation_condition(x, e->z, e->omega));
    report["oscillating"] = std::move(osc);
  }
  out << "kernel " << f.describe() << '\n';
  for (std::size_t a = 0; a < xs.size(); ++a) {
    out << "  x=" << format_number(xs[a], p)
        << " delta_coeff=" << format_number(deltas[a], p) << '\n';
  }

  if (cfg.solve) {
    const Trajectory traj = solve_volterra(kernels, grid);
    const Discrepancy err = compare_trajectories(
        traj, [&](std::size_t row, double t) { return xs[row] + (1.0 - xs[row]) * f.value(t); });
    report["solve"] = {{"max_abs_error", number_json(err.max_abs_error, p)},
                       {"t_at_max", number_json(err.t_at_max, p)},
                       {"row", err.slot}};
    out << "  solver max error " << format_number(err.max_abs_error, p) << " at t="
        << format_number(err.t_at_max, p) << '\n';
  }
  finish(cfg, output_path(cfg, "kernel"), table, std::move(report), out);
  return kExitOk;
}

int cmd_example(const RunConfig& cfg, std::ostream& out) {
  ExampleOutput ex = run_example(cfg.example_id, cfg.precision);
  const auto path = output_path(cfg, "example_" + std::to_string(cfg.example_id));
  bool all = true;
  for (const Check& c : ex.checks) {
    all = all && c.passed;
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  }
  ex.report["checks"] = checks_json(ex.checks);
  finish(cfg, path, ex.table, std::move(ex.report), out);
  write_checks(ex.checks, check_path(path));
  return all ? kExitOk : kExitVerification;
}

}  // namespace gpc::cli
