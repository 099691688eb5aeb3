#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "gpc/eigen_function.h"

namespace gpc {

// Root refinement target in lambda-value (not in t).
inline constexpr double kRootTol = 1e-9;

// Convex mixture sum_a x_a Lambda_a(t) of single-basis maps sharing one
// eigenvalue function lambda(t).
class MixtureSpec {
 public:
  // Throws Error{kInvalidDistribution} unless x >= 0, |sum x - 1| <= tol and
  // there are exactly d+1 weights.
  MixtureSpec(Dim d, std::vector<double> weights, EigenFunction f,
              double tol = kAlgebraTol);

  Dim dim() const noexcept { return d_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const EigenFunction& function() const noexcept { return f_; }

 private:
  Dim d_;
  std::vector<double> weights_;
  EigenFunction f_;
};

// lambda_a(t) = x_a + (1 - x_a) lambda(t), a = 1..d+1.
std::vector<double> mixture_eigenvalues(const MixtureSpec& m, double t);
std::vector<double> mixture_eigenvalue_derivatives(const MixtureSpec& m, double t);

// p(t) recovered from lambda(t) = 1 - d p(t)/(d-1).
double mixing_probability(double lambda, Dim d);

struct Threshold {
  double value = 0.0;                // -x_min/(1 - x_min)
  bool forced_non_invertible = false;  // some x_a = 0
};

Threshold invertibility_threshold(const std::vector<double>& weights);

// ((1 + (k-1) lambda)/k, lambda): slots 1..k, then slots k+1..d+1.
std::pair<double, double> k_block_eigenvalues(int k, double lambda, Dim d);

enum class Verdict { kInvertible, kNonInvertible, kNonInvertibleZeroWeight };

const char* to_string(Verdict v);

struct Root {
  double t = 0.0;
  bool tangential = false;  // zero without a sign change
};

struct RootShift {
  double component_root = 0.0;
  double mixture_root = 0.0;
  double shift = 0.0;  // mixture_root - component_root
};

struct SingularityReport {
  std::vector<std::vector<Root>> slot_roots;  // [alpha-1], sorted in t
  std::vector<Root> component_roots;          // zeros of lambda(t) itself
  std::vector<RootShift> shifts;              // paired by order of appearance
  Verdict verdict = Verdict::kInvertible;
  Threshold threshold;
  double lambda_min = 0.0;  // min of lambda(t) over the grid

  bool has_roots() const;
};

// Roots of a scalar function on [0, t_max]: sign changes on the h-grid are
// bisected; grid minima of |f| without a sign change are refined through the
// derivative and kept when |f| <= kRootTol there.
std::vector<Root> find_roots(const std::function<double(double)>& f,
                             const std::function<double(double)>& df, double t_max,
                             double h);

// Default grid step 1e-3 t_max when h <= 0.
SingularityReport find_singularities(const MixtureSpec& m, double t_max, double h = 0.0);

}  // namespace gpc
