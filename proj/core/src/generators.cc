#include "gpc/generators.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gpc/error.h"

namespace gpc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kQuadratureTol = 1e-10;

template <class F>
double integrate(F&& f, double a, double b) {
  if (b <= a) return 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      std::forward<F>(f), a, b, 20, kQuadratureTol);
}

// -value'/value with an infinity marker at (numerically) zero value.
double log_rate(double value, double derivative) {
  if (std::abs(value) < kZeroEigenvalue) {
    if (derivative == 0.0) return kNaN;
    return derivative < 0.0 ? kInf : -kInf;
  }
  return -derivative / value;
}

}  // namespace

double component_rate(const EigenFunction& f, double t) {
  return log_rate(f.value(t), f.derivative(t));
}

double component_rate_integral(const EigenFunction& f, double t) {
  if (!f.is_table()) return -std::log(f.value(t));
  return integrate([&f](double s) { return component_rate(f, s); }, 0.0, t);
}

std::vector<double> mixture_rates(const MixtureSpec& m, double t) {
  const EigenFunction& f = m.function();
  if (!(t < f.first_zero()) || !(f.value(t) > 0.0)) {
    throw Error(ErrorCode::kComponentSingular,
                "component eigenvalue vanishes on [0, " + std::to_string(t) + "]");
  }
  const double dd = m.dim().value();
  const double gamma = component_rate(f, t);
  const double growth = std::exp(component_rate_integral(f, t)) - 1.0;
  std::vector<double> term;
  term.reserve(m.weights().size());
  double gamma0 = 0.0;
  for (double x : m.weights()) {
    term.push_back(gamma * (1.0 - x) / (1.0 + growth * x));
    gamma0 += term.back();
  }
  gamma0 /= dd;
  for (double& g : term) g = gamma0 - g;
  return term;
}

std::vector<double> mixture_rates_closed_form(const MixtureSpec& m, double t) {
  const std::vector<double> lambda = mixture_eigenvalues(m, t);
  const std::vector<double> dlambda = mixture_eigenvalue_derivatives(m, t);
  const std::size_t slots = lambda.size();
  const double dd = m.dim().value();

  std::vector<double> mu(slots);
  for (std::size_t a = 0; a < slots; ++a) mu[a] = log_rate(lambda[a], dlambda[a]);

  // gamma_a = sum_b c_ab mu_b, c_ab = 1/d (b != a), -(d-1)/d (b == a).
  // Infinite mu_b are combined through their coefficients so that equal
  // infinities in every slot resolve to a signed infinity instead of NaN.
  std::vector<double> rates(slots);
  for (std::size_t a = 0; a < slots; ++a) {
    double finite = 0.0;
    double weight = 0.0;
    bool pos = false, neg = false, nan = false;
    for (std::size_t b = 0; b < slots; ++b) {
      const double c = (a == b) ? -(dd - 1.0) / dd : 1.0 / dd;
      if (std::isnan(mu[b])) {
        nan = true;
      } else if (std::isinf(mu[b])) {
        (mu[b] > 0.0 ? pos : neg) = true;
        weight += c * (mu[b] > 0.0 ? 1.0 : -1.0);
      } else {
        finite += c * mu[b];
      }
    }
    if (nan || (pos && neg)) {
      rates[a] = kNaN;
    } else if (pos || neg) {
      rates[a] = weight > 0.0 ? kInf : (weight < 0.0 ? -kInf : kNaN);
    } else {
      rates[a] = finite;
    }
  }
  return rates;
}

std::pair<double, double> k_block_rates(int k, double gamma, double big_gamma, Dim d) {
  if (k < 1 || k > d.slots()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "block size k = " + std::to_string(k) + " outside 1..d+1");
  }
  const double dd = d.value();
  const double decay = std::exp(-big_gamma);
  const double denom = 1.0 + (k - 1.0) * decay;
  const double shared = (gamma / dd) * (dd - (k - 1.0) * (1.0 - decay)) / denom;
  const double passthrough = -(gamma / dd) * (k - 1.0) * (1.0 - decay) / denom;
  return {shared, passthrough};
}

const char* to_string(RegularityVerdict::Kind k) {
  switch (k) {
    case RegularityVerdict::Kind::kRegular: return "regular";
    case RegularityVerdict::Kind::kSingular: return "singular";
    case RegularityVerdict::Kind::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

RegularityVerdict regularity_scan(const MixtureSpec& m, double t_max, double h) {
  const SingularityReport report = find_singularities(m, t_max, h);
  RegularityVerdict verdict;
  verdict.forced_non_invertible = report.threshold.forced_non_invertible;
  for (std::size_t a = 0; a < report.slot_roots.size(); ++a) {
    const double x = m.weights()[a];
    for (const Root& root : report.slot_roots[a]) {
      const double slope = (1.0 - x) * m.function().derivative(root.t);
      auto& bucket =
          std::abs(slope) > kRootTol ? verdict.singular_at : verdict.indeterminate_at;
      bucket.push_back(root.t);
    }
  }
  auto tidy = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end(),
                        [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
            v.end());
  };
  tidy(verdict.singular_at);
  tidy(verdict.indeterminate_at);
  if (!verdict.singular_at.empty()) {
    verdict.kind = RegularityVerdict::Kind::kSingular;
  } else if (!verdict.indeterminate_at.empty()) {
    verdict.kind = RegularityVerdict::Kind::kIndeterminate;
  }
  return verdict;
}

RateProfile::RateProfile(Dim d, Evaluator rates, std::optional<EigenFunction> component)
    : d_(d), rates_(std::move(rates)), component_(std::move(component)) {}

RateProfile RateProfile::from_mixture(const MixtureSpec& m) {
  return RateProfile(
      m.dim(), [m](double t) { return mixture_rates_closed_form(m, t); }, m.function());
}

RateProfile RateProfile::single_component(const EigenFunction& f, int alpha, Dim d) {
  if (alpha < 1 || alpha > d.slots()) {
    throw Error(ErrorCode::kIndexOutOfRange, "basis index outside 1..d+1");
  }
  const std::size_t slot = static_cast<std::size_t>(alpha - 1);
  const std::size_t slots = static_cast<std::size_t>(d.slots());
  return RateProfile(
      d,
      [f, slot, slots](double t) {
        std::vector<double> r(slots, 0.0);
        r[slot] = component_rate(f, t);
        return r;
      },
      f);
}

RateProfile RateProfile::constant(Dim d, std::vector<double> rates) {
  if (static_cast<int>(rates.size()) != d.slots()) {
    throw Error(ErrorCode::kIndexOutOfRange, "need d+1 rates");
  }
  return RateProfile(d, [rates = std::move(rates)](double) { return rates; });
}

double RateProfile::total_rate(double t) const {
  double sum = 0.0;
  for (double g : rates_(t)) sum += g;
  return sum;
}

std::vector<double> RateProfile::accumulated(double t) const {
  std::vector<double> out(static_cast<std::size_t>(d_.slots()));
  for (std::size_t a = 0; a < out.size(); ++a) {
    out[a] = integrate([this, a](double s) { return rates_(s)[a]; }, 0.0, t);
  }
  return out;
}

std::vector<double> RateProfile::closed_form_eigenvalues(double t) const {
  std::vector<double> acc = accumulated(t);
  double total = 0.0;
  for (double g : acc) total += g;
  for (double& g : acc) g = std::exp(g - total);
  return acc;
}

Trajectory propagate_timelocal(const RateProfile& rates, const TimeGrid& grid) {
  const std::size_t slots = static_cast<std::size_t>(rates.dim().slots());
  Trajectory traj{grid, std::vector<std::vector<double>>(slots)};
  for (auto& v : traj.values) {
    v.resize(grid.size());
    v[0] = 1.0;
  }

  // lambda_a' = (gamma_a - gamma_0) lambda_a; returns the decay factors.
  auto coefficients = [&rates, slots](double t) {
    std::vector<double> g = rates.rates(t);
    double g0 = 0.0;
    for (double x : g) g0 += x;
    for (std::size_t a = 0; a < slots; ++a) {
      g[a] -= g0;
      if (!std::isfinite(g[a])) {
        throw Error(ErrorCode::kSingularRateOnGrid,
                    "non-finite rate at t = " + std::to_string(t));
      }
    }
    return g;
  };

  for (std::size_t n = 0; n + 1 < grid.size(); ++n) {
    const double t = grid.at(n);
    const double h = grid.at(n + 1) - t;
    const std::vector<double> c1 = coefficients(t);
    const std::vector<double> c2 = coefficients(t + 0.5 * h);
    const std::vector<double> c4 = coefficients(t + h);
    for (std::size_t a = 0; a < slots; ++a) {
      const double y = traj.values[a][n];
      const double k1 = c1[a] * y;
      const double k2 = c2[a] * (y + 0.5 * h * k1);
      const double k3 = c2[a] * (y + 0.5 * h * k2);
      const double k4 = c4[a] * (y + h * k3);
      traj.values[a][n + 1] = y + h * (k1 + 2.0 * k2 + 2.0 * k3 + k4) / 6.0;
    }
  }
  return traj;
}

IntegralIdentity semigroup_integral_identity(Dim d, double r, double t) {
  const double dd = d.value();
  if (!(t >= 0.0 && t < std::log(dd + 1.0) / r)) {
    throw Error(ErrorCode::kComponentSingular,
                "identity needs 0 <= t < ln(d+1)/r");
  }
  IntegralIdentity out;
  out.quadrature = integrate(
      [dd, r](double s) { return (dd + 1.0) * r / (dd + 1.0 - std::exp(r * s)); }, 0.0, t);
  const double growth = std::exp(r * t);
  out.closed_form = std::log(dd * growth / (dd + 1.0 - growth));
  return out;
}

}  // namespace gpc
