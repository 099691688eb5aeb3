#include <cmath>
#include <numbers>
#include <string>

#include "commands.h"
#include "gpc/gpc.h"

namespace gpc::cli {
namespace {

using std::numbers::pi;

struct Ctx {
  int precision;
  ExampleOutput out;

  std::string num(double v) const { return format_number(v, precision); }

  void within(const std::string& name, double got, double want, double tol) {
    const double err = std::abs(got - want);
    out.checks.push_back({name, err <= tol,
                          "got " + num(got) + ", expected " + num(want) + ", |diff| " +
                              format_number(err, 3) + " <= " + format_number(tol, 3)});
  }

  void at_most(const std::string& name, double got, double tol) {
    out.checks.push_back(
        {name, got <= tol, format_number(got, 3) + " <= " + format_number(tol, 3)});
  }

  void holds(const std::string& name, bool ok, const std::string& detail) {
    out.checks.push_back({name, ok, detail});
  }
};

// t, lambda, lambda_1..lambda_{d+1}
Table eigenvalue_table(const MixtureSpec& m, const TimeGrid& grid) {
  Table table{{"t", "lambda"}, {}};
  for (int a = 1; a <= m.dim().slots(); ++a) table.columns.push_back("lambda_" + std::to_string(a));
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double t = grid.at(n);
    std::vector<double> row{t, m.function().value(t)};
    for (double v : mixture_eigenvalues(m, t)) row.push_back(v);
    table.rows.push_back(std::move(row));
  }
  return table;
}

Json roots_of(const SingularityReport& rep, const Ctx& c) {
  Json out = Json::array();
  for (const auto& slot : rep.slot_roots) {
    std::vector<double> ts;
    for (const Root& r : slot) ts.push_back(r.t);
    out.push_back(numbers_json(ts, c.precision));
  }
  return out;
}

std::vector<double> component_root_times(const SingularityReport& rep) {
  std::vector<double> out;
  for (const Root& r : rep.component_roots) out.push_back(r.t);
  return out;
}

// Uniform mixture: a component root that the mixture does not inherit.
void example_uniform(Ctx& c) {
  const Dim d(2);
  const auto f = EigenFunction::exp_cos(0.5, 1.0);
  const MixtureSpec m(d, {1.0 / 3, 1.0 / 3, 1.0 / 3}, f);
  const TimeGrid grid(10.0, 1e-3);
  const auto rep = find_singularities(m, grid.t_max(), grid.step());
  c.out.table = eigenvalue_table(m, grid);
  c.out.report = {{"d", 2}, {"lambda", f.describe()}, {"weights", "1/3,1/3,1/3"},
                  {"verdict", to_string(rep.verdict)},
                  {"component_roots", numbers_json(component_root_times(rep), c.precision)},
                  {"lambda_min", number_json(rep.lambda_min, c.precision)}};
  c.within("component root", rep.component_roots.empty() ? NAN : rep.component_roots[0].t,
           pi / 2, 1e-6);
  c.holds("lambda stays above -1/d", rep.lambda_min > -1.0 / d.value(),
          "min lambda " + c.num(rep.lambda_min) + " > -1/2");
  c.holds("mixture invertible", rep.verdict == Verdict::kInvertible && !rep.has_roots(),
          to_string(rep.verdict));
}

// Damped cosine tuned so lambda(pi) = -1/(d-1).
void example_damped(Ctx& c) {
  const Dim d(3);
  const double z = std::log(2.0) / pi;
  const auto f = EigenFunction::exp_cos(z, 1.0);
  const MixtureSpec m(d, {1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0}, f);
  const TimeGrid grid(4.0, 1e-3);
  const auto rep = find_singularities(m, grid.t_max(), grid.step());
  const auto range = check_range(f, d, grid.t_max(), grid.step());
  c.out.table = eigenvalue_table(m, grid);
  c.out.report = {{"d", 3}, {"lambda", f.describe()}, {"weights", "1/3,1/3,1/3,0"},
                  {"verdict", to_string(rep.verdict)},
                  {"roots", roots_of(rep, c)},
                  {"lambda_min", number_json(range.min_value, c.precision)},
                  {"t_at_lambda_min", number_json(range.t_at_min, c.precision)},
                  {"note", "min of lambda lies at t = pi - atan(Z), slightly below -1/(d-1); "
                           "slots 1-3 cross zero before pi and again at pi"}};
  c.within("lambda(pi)", f.value(pi), -0.5, 1e-12);
  for (int a = 0; a < 3; ++a) {
    double best = NAN;
    for (const Root& r : rep.slot_roots[a])
      if (std::isnan(best) || std::abs(r.t - pi) < std::abs(best - pi)) best = r.t;
    c.within("slot " + std::to_string(a + 1) + " root at pi", best, pi, 1e-6);
  }
  c.within("slot 4 root at pi/2",
           rep.slot_roots[3].empty() ? NAN : rep.slot_roots[3][0].t, pi / 2, 1e-6);
}

// Qubit, cos, x = 1/3: roots shift from pi/2 + N pi to 2pi/3, 4pi/3.
void example_shift(Ctx& c) {
  const Dim d(2);
  const auto f = EigenFunction::cos(1.0);
  const MixtureSpec m(d, {1.0 / 3, 1.0 / 3, 1.0 / 3}, f);
  const TimeGrid grid(7.0, 1e-3);
  const auto rep = find_singularities(m, grid.t_max(), grid.step());
  c.out.table = eigenvalue_table(m, grid);
  Json shifts = Json::array();
  for (const auto& s : rep.shifts) shifts.push_back(number_json(s.shift, c.precision));
  c.out.report = {{"d", 2}, {"lambda", f.describe()}, {"weights", "1/3,1/3,1/3"},
                  {"verdict", to_string(rep.verdict)},
                  {"component_roots", numbers_json(component_root_times(rep), c.precision)},
                  {"roots", roots_of(rep, c)}, {"shifts", std::move(shifts)}};
  const auto& comp = rep.component_roots;
  c.within("component root 1", comp.size() > 0 ? comp[0].t : NAN, pi / 2, 1e-6);
  c.within("component root 2", comp.size() > 1 ? comp[1].t : NAN, 3 * pi / 2, 1e-6);
  const auto& mix = rep.slot_roots[0];
  c.within("first mixture root", mix.size() > 0 ? mix[0].t : NAN, 2 * pi / 3, 1e-6);
  c.within("second mixture root", mix.size() > 1 ? mix[1].t : NAN, 4 * pi / 3, 1e-6);
  c.within("first shift", rep.shifts.empty() ? NAN : rep.shifts[0].shift, pi / 6, 1e-6);
}

// Integral identity behind gamma_a = r/d.
void example_identity(Ctx& c) {
  c.out.table.columns = {"d", "t", "quadrature", "closed_form", "abs_error"};
  Json rates = Json::array();
  for (int dv : {2, 3}) {
    const Dim d(dv);
    const double t_star = std::log(dv + 1.0);
    for (double t : {0.2, 0.5, 0.9 * t_star}) {
      const auto id = semigroup_integral_identity(d, 1.0, t);
      const double err = std::abs(id.quadrature - id.closed_form);
      c.out.table.rows.push_back({double(dv), t, id.quadrature, id.closed_form, err});
      c.at_most("identity d=" + std::to_string(dv) + " t=" + c.num(t), err, 1e-8);
    }
    const MixtureSpec m(d, std::vector<double>(dv + 1, 1.0 / (dv + 1)),
                        EigenFunction::semigroup_mix(1.0, d));
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = 0.99 * t_star * i / 99.0;
      for (double g : mixture_rates(m, t)) worst = std::max(worst, std::abs(g - 1.0 / dv));
    }
    c.at_most("rates r/d, d=" + std::to_string(dv), worst, 1e-9);
    rates.push_back({{"d", dv}, {"max_rate_error", number_json(worst, c.precision)}});
  }
  c.out.report = {{"r", 1}, {"rates", std::move(rates)}};
}

// Singular components mixing into the semigroup exp(-rt).
void example_semigroup(Ctx& c) {
  const Dim d(2);
  const double r = 1.0;
  const auto f = EigenFunction::semigroup_mix(r, d);
  const MixtureSpec m(d, {1.0 / 3, 1.0 / 3, 1.0 / 3}, f);
  const TimeGrid grid(5.0, 1e-3);
  const auto prop = propagate_timelocal(RateProfile::from_mixture(m), grid);

  Table table{{"t", "lambda", "lambda_1", "lambda_2", "lambda_3", "propagated_1",
               "propagated_2", "propagated_3", "gamma_1", "gamma_2", "gamma_3"},
              {}};
  double err_closed = 0.0, err_prop = 0.0, err_rate = 0.0;
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double t = grid.at(n);
    const auto lam = mixture_eigenvalues(m, t);
    const auto gam = mixture_rates_closed_form(m, t);
    std::vector<double> row{t, f.value(t)};
    for (std::size_t a = 0; a < 3; ++a) {
      row.push_back(lam[a]);
      err_closed = std::max(err_closed, std::abs(lam[a] - std::exp(-r * t)));
    }
    for (std::size_t a = 0; a < 3; ++a) {
      row.push_back(prop.values[a][n]);
      err_prop = std::max(err_prop, std::abs(prop.values[a][n] - std::exp(-r * t)));
    }
    for (double g : gam) {
      row.push_back(g);
      err_rate = std::max(err_rate, std::abs(g - r / d.value()));
    }
    table.rows.push_back(std::move(row));
  }
  c.out.table = std::move(table);
  c.out.report = {{"d", 2}, {"r", r}, {"lambda", f.describe()},
                  {"component_zero", number_json(f.first_zero(), c.precision)}};
  c.within("component zero at ln(d+1)/r", f.first_zero(), std::log(3.0), 1e-12);
  c.at_most("max |lambda_a - exp(-t)|", err_closed, 1e-8);
  c.at_most("max |propagated - exp(-t)|", err_prop, 1e-8);
  c.at_most("max |gamma_a - r/d|", err_rate, 1e-9);
}

// Memory kernels of the catalog, solved and compared with closed forms.
void example_kernels(Ctx& c) {
  const TimeGrid grid(10.0, 1e-3);
  const auto cos1 = EigenFunction::cos(1.0);
  const auto semi = EigenFunction::semigroup_mix(1.0, Dim(2));
  const double z = std::log(2.0) / pi;
  const auto damped = EigenFunction::exp_cos(z, 1.0);

  struct Case {
    std::string name;
    Kernel kernel;
    std::function<double(double)> exact;
    double tol;
  };
  std::vector<Case> cases{
      {"cos component", component_kernel_analytic(cos1, Dim(2)),
       [](double t) { return std::cos(t); }, 1e-4},
      {"semigroup-mix component", component_kernel_analytic(semi, Dim(2)),
       [&](double t) { return semi.value(t); }, 5e-4},
      {"cos mixture x=1/3", mixture_kernel_slot(cos1, 1.0 / 3, Dim(2)),
       [](double t) { return (1.0 + 2.0 * std::cos(t)) / 3.0; }, 5e-4},
      {"expcos mixture x=1/3", mixture_kernel_slot(damped, 1.0 / 3, Dim(3)),
       [&](double t) { return 1.0 / 3 + 2.0 / 3 * damped.value(t); }, 5e-4},
  };
  std::vector<Kernel> kernels;
  for (const auto& k : cases) kernels.push_back(k.kernel);
  const Trajectory traj = solve_volterra(kernels, grid);

  c.out.table.columns = {"t", "cos", "semigroup_mix", "cos_mixture", "expcos_mixture"};
  for (std::size_t n = 0; n < grid.size(); ++n) {
    std::vector<double> row{grid.at(n)};
    for (const auto& v : traj.values) row.push_back(v[n]);
    c.out.table.rows.push_back(std::move(row));
  }
  Json solved = Json::array();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    Trajectory one{grid, {traj.values[i]}};
    const auto err = compare_trajectories(one, [&](std::size_t, double t) { return cases[i].exact(t); });
    c.at_most(cases[i].name, err.max_abs_error, cases[i].tol);
    solved.push_back({{"case", cases[i].name},
                      {"delta_coeff", number_json(cases[i].kernel.delta_coeff, c.precision)},
                      {"max_abs_error", number_json(err.max_abs_error, c.precision)}});
  }
  c.within("semigroup-mix delta coefficient", cases[1].kernel.delta_coeff, -1.5, 1e-14);
  const double gamma_at = component_rate(semi, std::log(3.0));
  c.holds("semigroup-mix generator singular at ln 3", std::isinf(gamma_at),
          "gamma(ln 3) = " + c.num(gamma_at));
  const bool osc = oscillation_condition(1.0 / 3, z, 1.0);
  c.holds("expcos x=1/3 kernel oscillates", osc, osc ? "true" : "false");
  c.out.report = {{"t_max", 10}, {"step", number_json(grid.step(), c.precision)},
                  {"solves", std::move(solved)}};
}

// SemigroupMix mixture kernels, including the pure-delta slot x = 1/(d+1).
void example_semigroup_kernels(Ctx& c) {
  const Dim d(3);
  const double r = 1.0;
  const auto f = EigenFunction::semigroup_mix(r, d);
  const std::vector<double> xs{0.1, 0.25, 0.25, 0.4};
  const TimeGrid grid(5.0, 1e-3);
  const auto kernels = mixture_kernel_analytic(f, xs, d);
  const Trajectory traj = solve_volterra(kernels, grid);
  const auto err = compare_trajectories(
      traj, [&](std::size_t a, double t) { return xs[a] + (1.0 - xs[a]) * f.value(t); });

  Kernel printed;
  printed.delta_coeff = -r / d.value();
  const auto printed_err = compare_trajectories(
      solve_volterra(printed, grid), [&](std::size_t, double t) { return std::exp(-r * t); });

  c.out.table.columns = {"t", "lambda_1", "lambda_2", "lambda_3", "lambda_4"};
  for (std::size_t n = 0; n < grid.size(); ++n) {
    std::vector<double> row{grid.at(n)};
    for (const auto& v : traj.values) row.push_back(v[n]);
    c.out.table.rows.push_back(std::move(row));
  }
  std::vector<double> deltas;
  for (const Kernel& k : kernels) deltas.push_back(k.delta_coeff);
  c.out.report = {
      {"d", 3}, {"r", r}, {"weights", numbers_json(xs, c.precision)},
      {"delta_coeff", numbers_json(deltas, c.precision)},
      {"max_abs_error", number_json(err.max_abs_error, c.precision)},
      {"erratum", "x = 1/(d+1) gives kappa = -r delta(t); the coefficient -(r/d) does not "
                  "reproduce exp(-rt) (max error " + c.num(printed_err.max_abs_error) + ")"}};
  c.at_most("Volterra vs closed form", err.max_abs_error, 5e-4);
  c.within("x=1/(d+1) delta coefficient", deltas[1], -r, 1e-14);
  c.holds("x=1/(d+1) regular part vanishes", kernels[1].regular(1.0) == 0.0,
          "kappa_reg(1) = " + c.num(kernels[1].regular(1.0)));
  c.holds("erratum flagged", printed_err.max_abs_error > 1e-2,
          "-(r/d) delta gives max error " + c.num(printed_err.max_abs_error));
}

}  // namespace

ExampleOutput run_example(int id, int precision) {
  Ctx c{precision, {}};
  switch (id) {
    case 1: example_uniform(c); break;
    case 2: example_damped(c); break;
    case 3: example_shift(c); break;
    case 4: example_identity(c); break;
    case 5: example_semigroup(c); break;
    case 6: example_kernels(c); break;
    case 7: example_semigroup_kernels(c); break;
    default:
      throw Error(ErrorCode::kParseError, "example id must be in 1..7");
  }
  c.out.report["example"] = id;
  return std::move(c.out);
}

}  // namespace gpc::cli
