#include "gpc/mixtures.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "gpc/error.h"

namespace gpc {
namespace {

// Bisects f on [lo, hi] (f(lo) f(hi) < 0) down to adjacent doubles.
double bisect_root(const std::function<double(double)>& f, double lo, double hi) {
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::bisect(
      f, lo, hi, boost::math::tools::eps_tolerance<double>(53), max_iter);
  return std::abs(f(a)) <= std::abs(f(b)) ? a : b;
}

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

std::vector<double> grid_nodes(double t_max, double h) {
  const auto n = static_cast<long long>(std::ceil(t_max / h - 1e-9));
  std::vector<double> t(static_cast<std::size_t>(n) + 1);
  for (long long i = 0; i <= n; ++i) t[i] = std::min(static_cast<double>(i) * h, t_max);
  return t;
}

void check_window(double t_max, double h) {
  if (!(t_max > 0.0) || !(h > 0.0)) {
    throw Error(ErrorCode::kParseError, "window and step must be positive");
  }
}

}  // namespace

MixtureSpec::MixtureSpec(Dim d, std::vector<double> weights, EigenFunction f, double tol)
    : d_(d), weights_(std::move(weights)), f_(std::move(f)) {
  if (static_cast<int>(weights_.size()) != d_.slots()) {
    throw Error(ErrorCode::kInvalidDistribution,
                "need " + std::to_string(d_.slots()) + " weights, got " +
                    std::to_string(weights_.size()));
  }
  for (double x : weights_) {
    if (!(x >= 0.0)) {
      throw Error(ErrorCode::kInvalidDistribution, "weights must be non-negative");
    }
  }
  const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
  if (std::abs(total - 1.0) > tol) {
    throw Error(ErrorCode::kInvalidDistribution,
                "weights sum to " + std::to_string(total) + ", not 1");
  }
}

std::vector<double> mixture_eigenvalues(const MixtureSpec& m, double t) {
  const double lambda = m.function().value(t);
  std::vector<double> out;
  out.reserve(m.weights().size());
  for (double x : m.weights()) out.push_back(x + (1.0 - x) * lambda);
  return out;
}

std::vector<double> mixture_eigenvalue_derivatives(const MixtureSpec& m, double t) {
  const double dlambda = m.function().derivative(t);
  std::vector<double> out;
  out.reserve(m.weights().size());
  for (double x : m.weights()) out.push_back((1.0 - x) * dlambda);
  return out;
}

double mixing_probability(double lambda, Dim d) {
  const double dd = d.value();
  return (1.0 - lambda) * (dd - 1.0) / dd;
}

Threshold invertibility_threshold(const std::vector<double>& weights) {
  const double x_min = *std::min_element(weights.begin(), weights.end());
  if (x_min <= 0.0) return {-0.0, true};
  return {-x_min / (1.0 - x_min), false};
}

std::pair<double, double> k_block_eigenvalues(int k, double lambda, Dim d) {
  if (k < 1 || k > d.slots()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "block size k = " + std::to_string(k) + " outside 1..d+1");
  }
  return {(1.0 + (k - 1.0) * lambda) / k, lambda};
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kInvertible: return "invertible";
    case Verdict::kNonInvertible: return "non-invertible";
    case Verdict::kNonInvertibleZeroWeight: return "non-invertible (zero weight)";
  }
  return "unknown";
}

bool SingularityReport::has_roots() const {
  return std::any_of(slot_roots.begin(), slot_roots.end(),
                     [](const auto& r) { return !r.empty(); });
}

std::vector<Root> find_roots(const std::function<double(double)>& f,
                             const std::function<double(double)>& df, double t_max,
                             double h) {
  check_window(t_max, h);
  const std::vector<double> t = grid_nodes(t_max, h);
  std::vector<double> v(t.size());
  std::transform(t.begin(), t.end(), v.begin(), f);

  std::vector<Root> roots;
  const std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0.0) {
      const bool crossing = i > 0 && i + 1 < n && opposite(v[i - 1], v[i + 1]);
      roots.push_back({t[i], !crossing});
      continue;
    }
    if (i > 0 && opposite(v[i - 1], v[i])) {
      roots.push_back({bisect_root(f, t[i - 1], t[i]), false});
      continue;
    }
    // grazing candidate: local minimum of |f| with no sign change nearby
    if (i == 0 || i + 1 >= n) continue;
    const double a = std::abs(v[i]);
    if (a > std::abs(v[i - 1]) || a > std::abs(v[i + 1])) continue;
    if (opposite(v[i - 1], v[i]) || opposite(v[i], v[i + 1]) || v[i - 1] == 0.0 ||
        v[i + 1] == 0.0) {
      continue;
    }
    const double dl = df(t[i - 1]);
    const double dr = df(t[i + 1]);
    if (!opposite(dl, dr)) continue;
    const double t_ext = bisect_root(df, t[i - 1], t[i + 1]);
    const double v_ext = f(t_ext);
    if (opposite(v_ext, v[i])) {
      // narrow dip through zero between two grid nodes
      roots.push_back({bisect_root(f, t[i - 1], t_ext), false});
      roots.push_back({bisect_root(f, t_ext, t[i + 1]), false});
    } else if (std::abs(v_ext) <= kRootTol) {
      roots.push_back({t_ext, true});
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.t < b.t; });
  roots.erase(std::unique(roots.begin(), roots.end(),
                          [](const Root& a, const Root& b) {
                            return std::abs(a.t - b.t) <= 1e-9;
                          }),
              roots.end());
  return roots;
}

SingularityReport find_singularities(const MixtureSpec& m, double t_max, double h) {
  if (h <= 0.0) h = 1e-3 * t_max;
  check_window(t_max, h);
  const EigenFunction& f = m.function();
  SingularityReport report;
  report.threshold = invertibility_threshold(m.weights());

  report.component_roots = find_roots([&f](double t) { return f.value(t); },
                                      [&f](double t) { return f.derivative(t); },
                                      t_max, h);
  std::vector<double> mixture_roots;
  for (double x : m.weights()) {
    auto roots = find_roots([&f, x](double t) { return x + (1.0 - x) * f.value(t); },
                            [&f, x](double t) { return (1.0 - x) * f.derivative(t); },
                            t_max, h);
    if (x > 0.0) {
      for (const Root& r : roots) mixture_roots.push_back(r.t);
    }
    report.slot_roots.push_back(std::move(roots));
  }
  std::sort(mixture_roots.begin(), mixture_roots.end());
  mixture_roots.erase(std::unique(mixture_roots.begin(), mixture_roots.end(),
                                  [](double a, double b) { return std::abs(a - b) <= 1e-9; }),
                      mixture_roots.end());
  const std::size_t pairs = std::min(mixture_roots.size(), report.component_roots.size());
  for (std::size_t i = 0; i < pairs; ++i) {
    const double tc = report.component_roots[i].t;
    report.shifts.push_back({tc, mixture_roots[i], mixture_roots[i] - tc});
  }

  report.lambda_min = std::numeric_limits<double>::infinity();
  for (double t : grid_nodes(t_max, h)) {
    report.lambda_min = std::min(report.lambda_min, f.value(t));
  }

  if (report.threshold.forced_non_invertible) {
    report.verdict = Verdict::kNonInvertibleZeroWeight;
  } else if (report.has_roots() || !(report.lambda_min > report.threshold.value)) {
    report.verdict = Verdict::kNonInvertible;
  } else {
    report.verdict = Verdict::kInvertible;
  }
  return report;
}

}  // namespace gpc
