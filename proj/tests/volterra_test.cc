#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "gpc/error.h"
#include "gpc/volterra.h"

namespace gpc {
namespace {

using std::numbers::pi;

TEST(TimeGridTest, Snapping) {
  const TimeGrid g(1.0, 0.03);
  EXPECT_EQ(g.intervals(), 33u);
  EXPECT_EQ(g.size(), 34u);
  EXPECT_NEAR(g.step(), 1.0 / 33.0, 1e-15);
  EXPECT_DOUBLE_EQ(g.at(g.intervals()), 1.0);
  try {
    TimeGrid(1.0, 0.2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStepTooLarge);
  }
  EXPECT_THROW(TimeGrid(1.0, -0.01), Error);
}

TEST(VolterraTest, CosKernelReproducesCosine) {
  const auto k = mixture_kernel_slot(EigenFunction::cos(1.0), 0.0, Dim(2));
  const auto traj = solve_volterra(k, TimeGrid(2 * pi, 1e-3));
  const auto err = compare_trajectories(traj, [](std::size_t, double t) { return std::cos(t); });
  EXPECT_LE(err.max_abs_error, 1e-4);
}

TEST(VolterraTest, PureDeltaIsExponential) {
  Kernel k;
  k.delta_coeff = -0.7;
  const auto traj = solve_volterra(k, TimeGrid(5.0, 1e-3));
  const auto err =
      compare_trajectories(traj, [](std::size_t, double t) { return std::exp(-0.7 * t); });
  EXPECT_LE(err.max_abs_error, 1e-6);
}

TEST(VolterraTest, SemigroupMixtureSlots) {
  const int d = 3;
  const double r = 1.0;
  const auto f = EigenFunction::semigroup_mix(r, Dim(d));
  const std::vector<double> x{0.25, 0.25, 0.25, 0.25};
  const auto traj = solve_volterra(mixture_kernel_analytic(f, x, Dim(d)), TimeGrid(4.0, 1e-3));
  ASSERT_EQ(traj.values.size(), 4u);
  const auto err =
      compare_trajectories(traj, [](std::size_t, double t) { return std::exp(-t); });
  EXPECT_LE(err.max_abs_error, 1e-6);
}

TEST(VolterraTest, MixedSlotsMatchClosedForm) {
  const auto f = EigenFunction::exp_cos(0.3, 1.2);
  const std::vector<double> x{0.1, 0.2, 0.3, 0.4};
  const auto traj = solve_volterra(mixture_kernel_analytic(f, x, Dim(3)), TimeGrid(3.0, 1e-3));
  const auto err = compare_trajectories(
      traj, [&](std::size_t a, double t) { return x[a] + (1.0 - x[a]) * f.value(t); });
  EXPECT_LE(err.max_abs_error, 1e-5);
}

TEST(CompareTest, Examples) {
  const TimeGrid g(1.0, 0.1);
  Trajectory a{g, {std::vector<double>(g.size(), 1.0), std::vector<double>(g.size(), 0.0)}};
  Trajectory b = a;
  b.values[1][4] = 0.25;
  const auto d = compare_trajectories(a, b);
  EXPECT_DOUBLE_EQ(d.max_abs_error, 0.25);
  EXPECT_EQ(d.slot, 1u);
  EXPECT_NEAR(d.t_at_max, 0.4, 1e-15);
  EXPECT_EQ(compare_trajectories(a, a).max_abs_error, 0.0);

  const Trajectory c{TimeGrid(1.0, 0.05), {std::vector<double>(21, 1.0)}};
  try {
    compare_trajectories(a, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kGridMismatch);
  }
}

TEST(ConvergenceTest, SecondOrder) {
  const auto k = mixture_kernel_slot(EigenFunction::exp_cos(0.2, 1.0), 0.3, Dim(2));
  const auto est = convergence_order(k, 2.0, {0.02, 0.01, 0.005, 0.0025});
  EXPECT_GE(est.order, 1.8);
  EXPECT_LE(est.order, 2.2);
  for (double ratio : est.ratios) {
    EXPECT_GE(ratio, 3.4);
    EXPECT_LE(ratio, 4.6);
  }
  EXPECT_THROW(convergence_order(k, 2.0, {0.02, 0.01}), Error);
}

TEST(ConvergenceTest, HalvingAgainstExact) {
  const auto k = mixture_kernel_slot(EigenFunction::cos(1.0), 0.0, Dim(2));
  auto err_at = [&](double h) {
    return compare_trajectories(solve_volterra(k, TimeGrid(pi, h)),
                                [](std::size_t, double t) { return std::cos(t); })
        .max_abs_error;
  };
  const double ratio = err_at(0.01) / err_at(0.005);
  EXPECT_GE(ratio, 3.4);
  EXPECT_LE(ratio, 4.6);
}

TEST(VolterraTest, Deterministic) {
  const auto k = mixture_kernel_slot(EigenFunction::exp_cos(0.1, 2.0), 0.4, Dim(2));
  const auto a = solve_volterra(k, TimeGrid(1.0, 0.01));
  const auto b = solve_volterra(k, TimeGrid(1.0, 0.01));
  EXPECT_EQ(a.values, b.values);
}

}  // namespace
}  // namespace gpc
