#include "gpc/volterra.h"

#include <cmath>
#include <numeric>
#include <string>

#include "gpc/error.h"

namespace gpc {

TimeGrid::TimeGrid(double t_max, double h) : t_max_(t_max), h_(h), n_(0) {
  if (!(t_max > 0.0) || !(h > 0.0) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::kParseError, "t_max and step must be positive");
  }
  if (h > t_max / 10.0) {
    throw Error(ErrorCode::kStepTooLarge,
                "step " + std::to_string(h) + " exceeds t_max/10");
  }
  n_ = static_cast<std::size_t>(std::llround(t_max / h));
  h_ = t_max / static_cast<double>(n_);
}

Trajectory solve_volterra(const Kernel& kernel, const TimeGrid& grid) {
  const std::size_t n_nodes = grid.size();
  const double h = grid.step();
  const double c = kernel.delta_coeff;

  std::vector<double> k(n_nodes);
  for (std::size_t m = 0; m < n_nodes; ++m) k[m] = kernel.regular(grid.at(m));

  std::vector<double> lambda(n_nodes, 0.0);
  lambda[0] = 1.0;
  const double self = 0.5 * h * k[0];  // weight of the unknown endpoint
  double f_n = c * lambda[0];

  for (std::size_t n = 0; n + 1 < n_nodes; ++n) {
    // trapezoid over [0, t_{n+1}] without the endpoint term
    double history = 0.5 * k[n + 1] * lambda[0];
    for (std::size_t j = 1; j <= n; ++j) history += k[n + 1 - j] * lambda[j];
    history *= h;

    const double predicted = lambda[n] + h * f_n;
    const double f_pred = c * predicted + history + self * predicted;
    lambda[n + 1] = lambda[n] + 0.5 * h * (f_n + f_pred);
    f_n = c * lambda[n + 1] + history + self * lambda[n + 1];
  }
  return {grid, {std::move(lambda)}};
}

Trajectory solve_volterra(const std::vector<Kernel>& kernels, const TimeGrid& grid) {
  Trajectory out{grid, {}};
  out.values.reserve(kernels.size());
  for (const Kernel& k : kernels) {
    out.values.push_back(std::move(solve_volterra(k, grid).values.front()));
  }
  return out;
}

Discrepancy compare_trajectories(
    const Trajectory& a, const std::function<double(std::size_t, double)>& exact) {
  Discrepancy worst;
  for (std::size_t row = 0; row < a.values.size(); ++row) {
    for (std::size_t n = 0; n < a.values[row].size(); ++n) {
      const double t = a.grid.at(n);
      const double err = std::abs(a.values[row][n] - exact(row, t));
      if (err > worst.max_abs_error) worst = {err, t, row};
    }
  }
  return worst;
}

Discrepancy compare_trajectories(const Trajectory& a, const Trajectory& b) {
  if (!(a.grid == b.grid) || a.values.size() != b.values.size()) {
    throw Error(ErrorCode::kGridMismatch, "trajectories live on different grids");
  }
  Discrepancy worst;
  for (std::size_t row = 0; row < a.values.size(); ++row) {
    for (std::size_t n = 0; n < a.values[row].size(); ++n) {
      const double err = std::abs(a.values[row][n] - b.values[row][n]);
      if (err > worst.max_abs_error) worst = {err, a.grid.at(n), row};
    }
  }
  return worst;
}

ConvergenceEstimate convergence_order(const Kernel& kernel, double t_max,
                                      const std::vector<double>& h_list) {
  if (h_list.size() < 3) {
    throw Error(ErrorCode::kParseError, "convergence_order needs at least 3 steps");
  }
  std::vector<Trajectory> runs;
  runs.reserve(h_list.size());
  for (double h : h_list) runs.push_back(solve_volterra(kernel, TimeGrid(t_max, h)));

  ConvergenceEstimate est;
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const auto& coarse = runs[i];
    const auto& fine = runs[i + 1];
    if (fine.grid.intervals() != 2 * coarse.grid.intervals()) {
      throw Error(ErrorCode::kGridMismatch, "steps must halve successively");
    }
    double err = 0.0;
    for (std::size_t n = 0; n < coarse.grid.size(); ++n) {
      err = std::max(err, std::abs(coarse.values[0][n] - fine.values[0][2 * n]));
    }
    est.errors.push_back(err);
  }
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < est.errors.size(); ++i) {
    est.ratios.push_back(est.errors[i] / est.errors[i + 1]);
    sum += std::log2(est.ratios.back());
  }
  est.order = sum / static_cast<double>(est.ratios.size());
  return est;
}

}  // namespace gpc
