#pragma once

#include <functional>
#include <vector>

#include "gpc/kernels.h"
#include "gpc/trajectory.h"

namespace gpc {

// Solves lambda'(t) = c lambda(t) + int_0^t k(t - s) lambda(s) ds, lambda(0) = 1,
// for kernel = c delta + k. Trapezoidal convolution with a Heun-type
// predictor-corrector; second order on smooth kernels. O(N^2) per solve.
Trajectory solve_volterra(const Kernel& kernel, const TimeGrid& grid);

// One trajectory row per kernel (slot order preserved).
Trajectory solve_volterra(const std::vector<Kernel>& kernels, const TimeGrid& grid);

struct Discrepancy {
  double max_abs_error = 0.0;
  double t_at_max = 0.0;
  std::size_t slot = 0;  // 0-based row of the worst value
};

// Max over nodes and rows of |a - exact(row, t)|.
Discrepancy compare_trajectories(
    const Trajectory& a, const std::function<double(std::size_t, double)>& exact);

// Throws Error{kGridMismatch} when grids or row counts differ.
Discrepancy compare_trajectories(const Trajectory& a, const Trajectory& b);

struct ConvergenceEstimate {
  double order = 0.0;              // mean of log2 of successive error ratios
  std::vector<double> errors;      // max |lambda_h - lambda_{h/2}| per pair
  std::vector<double> ratios;      // errors[i] / errors[i+1]
};

// Solves on each step in h_list (each h halving the previous) and compares
// successive pairs at the shared coarse nodes. Needs at least 3 steps.
ConvergenceEstimate convergence_order(const Kernel& kernel, double t_max,
                                      const std::vector<double>& h_list);

}  // namespace gpc
