#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "gpc/mixtures.h"
#include "gpc/trajectory.h"

namespace gpc {

// |lambda| below this makes a rate an infinity marker.
inline constexpr double kZeroEigenvalue = 1e-14;

// gamma(t) = -lambda'(t)/lambda(t); +-infinity when |lambda| < 1e-14, with
// the sign of -lambda' (approach from the left).
double component_rate(const EigenFunction& f, double t);

// Gamma(t) = int_0^t gamma = -ln lambda(t); adaptive quadrature for tables.
double component_rate_integral(const EigenFunction& f, double t);

// Decoherence rates of the mixture in the (gamma, Gamma) form
//   gamma_a = -gamma (1-x_a)/(1+(e^Gamma-1)x_a) + gamma_0.
// Requires lambda > 0 on [0, t]; throws Error{kComponentSingular} otherwise.
std::vector<double> mixture_rates(const MixtureSpec& m, double t);

// The same rates written through the mixture eigenvalues,
//   gamma_a = gamma_0 - mu_a,  mu_a = -lambda_a'/lambda_a,  gamma_0 = sum mu / d,
// which stays finite where only the component is singular.
std::vector<double> mixture_rates_closed_form(const MixtureSpec& m, double t);

// Rates for k equal weights 1/k: (slots 1..k, slots k+1..d+1).
std::pair<double, double> k_block_rates(int k, double gamma, double big_gamma, Dim d);

struct RegularityVerdict {
  enum class Kind { kRegular, kSingular, kIndeterminate };
  Kind kind = Kind::kRegular;
  std::vector<double> singular_at;       // lambda_a = 0 with lambda_a' != 0
  std::vector<double> indeterminate_at;  // lambda_a = 0 and lambda_a' = 0
  bool forced_non_invertible = false;
};

const char* to_string(RegularityVerdict::Kind k);

RegularityVerdict regularity_scan(const MixtureSpec& m, double t_max, double h = 0.0);

// Time-local rates gamma_a(t), a = 1..d+1, with gamma_0 = sum gamma_a.
class RateProfile {
 public:
  using Evaluator = std::function<std::vector<double>(double)>;

  RateProfile(Dim d, Evaluator rates,
              std::optional<EigenFunction> component = std::nullopt);

  // Mixture rates via mixture_rates_closed_form.
  static RateProfile from_mixture(const MixtureSpec& m);
  // Lambda_alpha(t) generated by gamma(t) L_alpha alone.
  static RateProfile single_component(const EigenFunction& f, int alpha, Dim d);
  static RateProfile constant(Dim d, std::vector<double> rates);

  Dim dim() const noexcept { return d_; }
  std::vector<double> rates(double t) const { return rates_(t); }
  double total_rate(double t) const;
  const std::optional<EigenFunction>& component() const noexcept { return component_; }

  // Gamma_a(t) = int_0^t gamma_a, adaptive quadrature.
  std::vector<double> accumulated(double t) const;
  // exp[Gamma_a(t) - Gamma_0(t)].
  std::vector<double> closed_form_eigenvalues(double t) const;

 private:
  Dim d_;
  Evaluator rates_;
  std::optional<EigenFunction> component_;
};

// Fixed-step RK4 for lambda_a' = (gamma_a - gamma_0) lambda_a, lambda_a(0) = 1.
// Throws Error{kSingularRateOnGrid} on non-finite rates.
Trajectory propagate_timelocal(const RateProfile& rates, const TimeGrid& grid);

struct IntegralIdentity {
  double quadrature = 0.0;
  double closed_form = 0.0;
};

// int_0^t (d+1) r/(d+1-e^{r tau}) dtau against ln[d e^{rt}/(d+1-e^{rt})],
// constant r, t < ln(d+1)/r.
IntegralIdentity semigroup_integral_identity(Dim d, double r, double t);

}  // namespace gpc
