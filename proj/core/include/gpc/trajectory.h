#pragma once

#include <cstddef>
#include <vector>

namespace gpc {

// Uniform grid t_n = n h, n = 0..N, with N h = t_max.
class TimeGrid {
 public:
  // Throws Error{kStepTooLarge} if h > t_max/10, Error{kParseError} for
  // non-positive arguments.
  TimeGrid(double t_max, double h);

  double t_max() const noexcept { return t_max_; }
  double step() const noexcept { return h_; }
  std::size_t intervals() const noexcept { return n_; }
  std::size_t size() const noexcept { return n_ + 1; }
  double at(std::size_t n) const noexcept {
    return n == n_ ? t_max_ : static_cast<double>(n) * h_;
  }

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  double t_max_;
  double h_;
  std::size_t n_;
};

// Eigenvalue trajectories lambda_a(t_n); values[a][0] = 1.
struct Trajectory {
  TimeGrid grid;
  std::vector<std::vector<double>> values;
};

}  // namespace gpc
