#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gpc/eigen_function.h"

namespace gpc {

// Memory-kernel eigenvalue kappa(t) = delta_coeff * delta(t) + regular(t).
// The delta part is kept symbolic.
struct Kernel {
  double delta_coeff = 0.0;
  std::function<double(double)> regular = [](double) { return 0.0; };
  int slot = 0;  // 1..d+1 for a mixture slot, 0 for the component kernel
};

// l(t) with its integral L(t) = int_0^t l, so that lambda(t) = 1 - L(t).
struct EllFunction {
  std::function<double(double)> ell;
  std::function<double(double)> integral;
};

// l = -lambda', L = 1 - lambda.
EllFunction ell_from_lambda(const EigenFunction& f);

struct LegitimacyReport {
  bool legitimate = true;
  double worst_slack = 0.0;  // most negative slack over all conditions
  double t_worst = 0.0;
  int violated_condition = 0;  // 0 if none; otherwise 1..3
};

// 0 <= L(t) <= d/(d-1) on the grid, slack 1e-9.
LegitimacyReport component_legitimacy(const EllFunction& ell, Dim d, double t_max,
                                      double h);

// With L_a = (1 - x_a) L:
//   (1) L_a >= 0, (2) sum_b L_b <= d^2/(d-1), (3) sum_b L_b >= d L_a.
LegitimacyReport mixture_legitimacy(const EllFunction& ell,
                                    const std::vector<double>& weights, Dim d,
                                    double t_max, double h);

// x/(1-x)^2 > (Z/(2 omega))^2.
bool oscillation_condition(double x, double z, double omega);

// Closed-form kernel generating lambda_a = x + (1 - x) lambda for one slot
// weight x. Families: Cos, ExpCos, SemigroupMix; others throw
// Error{kUnsupportedFamily}.
Kernel mixture_kernel_slot(const EigenFunction& f, double x, Dim d, int slot = 0);

std::vector<Kernel> mixture_kernel_analytic(const EigenFunction& f,
                                            const std::vector<double>& weights, Dim d);

// Kernel of the single-basis map itself; Table throws Error{kUnsupportedFamily}.
Kernel component_kernel_analytic(const EigenFunction& f, Dim d);

// Parses kernel:family=<cos|expcos|semigroup-mix>,<params>,x=<f>.
// Params: omega for cos; Z and omega for expcos; r for semigroup-mix.
struct KernelSpec {
  EigenFunction function;
  double x;
};
KernelSpec parse_kernel_spec(const std::string& spec, Dim d);

}  // namespace gpc
