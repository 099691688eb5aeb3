#include "gpc/kernels.h"

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <variant>

#include "gpc/error.h"

namespace gpc {
namespace {

constexpr double kLegitimacySlack = 1e-9;
constexpr double kImagTol = 1e-10;

[[noreturn]] void unsupported(const EigenFunction& f) {
  throw Error(ErrorCode::kUnsupportedFamily,
              "no closed-form kernel for " + f.describe());
}

// sin(p t/2)/p, continuous through p = 0.
Complex half_angle_sinc(Complex p, double t) {
  const Complex arg = 0.5 * p * t;
  if (std::abs(arg) < 1e-4) {
    const Complex arg2 = arg * arg;
    return 0.5 * t * (1.0 - arg2 / 6.0 + arg2 * arg2 / 120.0);
  }
  return std::sin(arg) / p;
}

double exp_cos_regular(double z, double omega, double x, double t) {
  const double w2 = omega * omega;
  const Complex p = std::sqrt(Complex(4.0 * w2 * x - z * z * (1.0 - x) * (1.0 - x), 0.0));
  const Complex a = z * p * p + (1.0 - x) * z * (w2 + z * z);
  // B/P = omega^2 - x Z^2
  const Complex bracket =
      -a * half_angle_sinc(p, t) + (w2 - x * z * z) * std::cos(0.5 * p * t);
  const Complex value = -(1.0 - x) * std::exp(-z * (1.0 + x) * t / 2.0) * bracket;
  if (std::abs(value.imag()) > kImagTol * std::max(1.0, std::abs(value.real()))) {
    throw Error(ErrorCode::kConstructionFailure,
                "ExpCos kernel has a non-negligible imaginary part");
  }
  return value.real();
}

template <class Check>
LegitimacyReport scan(double t_max, double h, Check&& check) {
  if (!(t_max > 0.0) || !(h > 0.0)) {
    throw Error(ErrorCode::kParseError, "window and step must be positive");
  }
  LegitimacyReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  const auto n = static_cast<long long>(std::ceil(t_max / h - 1e-9));
  for (long long i = 0; i <= n; ++i) {
    const double t = std::min(static_cast<double>(i) * h, t_max);
    check(t, report);
  }
  report.legitimate = report.worst_slack >= -kLegitimacySlack;
  if (report.legitimate) report.violated_condition = 0;
  return report;
}

void record(LegitimacyReport& r, double slack, double t, int condition) {
  if (slack < r.worst_slack) {
    r.worst_slack = slack;
    r.t_worst = t;
    r.violated_condition = condition;
  }
}

}  // namespace

EllFunction ell_from_lambda(const EigenFunction& f) {
  return {[f](double t) { return -f.derivative(t); },
          [f](double t) { return 1.0 - f.value(t); }};
}

LegitimacyReport component_legitimacy(const EllFunction& ell, Dim d, double t_max,
                                      double h) {
  const double upper = d.value() / (d.value() - 1.0);
  return scan(t_max, h, [&](double t, LegitimacyReport& r) {
    const double big_l = ell.integral(t);
    record(r, big_l, t, 1);
    record(r, upper - big_l, t, 2);
  });
}

LegitimacyReport mixture_legitimacy(const EllFunction& ell,
                                    const std::vector<double>& weights, Dim d,
                                    double t_max, double h) {
  const double dd = d.value();
  const double upper = dd * dd / (dd - 1.0);
  return scan(t_max, h, [&](double t, LegitimacyReport& r) {
    const double big_l = ell.integral(t);
    double total = 0.0;
    for (double x : weights) total += (1.0 - x) * big_l;
    record(r, upper - total, t, 2);
    for (double x : weights) {
      const double la = (1.0 - x) * big_l;
      record(r, la, t, 1);
      record(r, total - dd * la, t, 3);
    }
  });
}

bool oscillation_condition(double x, double z, double omega) {
  const double ratio = z / (2.0 * omega);
  return x / ((1.0 - x) * (1.0 - x)) > ratio * ratio;
}

Kernel mixture_kernel_slot(const EigenFunction& f, double x, Dim d, int slot) {
  Kernel k;
  k.slot = slot;
  if (const auto* c = std::get_if<family::Cos>(&f.family())) {
    const double w = c->omega;
    const double amp = -w * w * (1.0 - x);
    const double freq = std::sqrt(x) * w;
    k.regular = [amp, freq](double t) { return amp * std::cos(freq * t); };
  } else if (const auto* e = std::get_if<family::ExpCos>(&f.family())) {
    k.delta_coeff = -(1.0 - x) * e->z;
    k.regular = [z = e->z, w = e->omega, x](double t) {
      return exp_cos_regular(z, w, x, t);
    };
  } else if (const auto* s = std::get_if<family::SemigroupMix>(&f.family())) {
    const double dd = d.value();
    k.delta_coeff = -(s->r / dd) * (dd + 1.0) * (1.0 - x);
    const double rate = (s->r / dd) * (1.0 - (dd + 1.0) * x);
    if (rate == 0.0) {
      k.regular = [](double) { return 0.0; };
    } else {
      k.regular = [amp = k.delta_coeff * rate, rate](double t) {
        return amp * std::exp(rate * t);
      };
    }
  } else {
    unsupported(f);
  }
  return k;
}

std::vector<Kernel> mixture_kernel_analytic(const EigenFunction& f,
                                            const std::vector<double>& weights, Dim d) {
  std::vector<Kernel> out;
  out.reserve(weights.size());
  for (std::size_t a = 0; a < weights.size(); ++a) {
    out.push_back(mixture_kernel_slot(f, weights[a], d, static_cast<int>(a + 1)));
  }
  return out;
}

Kernel component_kernel_analytic(const EigenFunction& f, Dim d) {
  if (std::holds_alternative<family::Exp>(f.family())) {
    Kernel k;
    k.delta_coeff = -std::get<family::Exp>(f.family()).r;
    return k;
  }
  if (f.is_table()) unsupported(f);
  return mixture_kernel_slot(f, 0.0, d, 0);
}

KernelSpec parse_kernel_spec(const std::string& spec, Dim d) {
  constexpr std::string_view kPrefix = "kernel:";
  std::string_view body = spec;
  if (body.substr(0, kPrefix.size()) == kPrefix) body.remove_prefix(kPrefix.size());

  std::string family_name;
  std::string params;
  std::string x_text;
  while (!body.empty()) {
    const auto comma = body.find(',');
    const std::string_view item = body.substr(0, comma);
    if (item.substr(0, 7) == "family=") {
      family_name = std::string(item.substr(7));
    } else if (item.substr(0, 2) == "x=") {
      x_text = std::string(item.substr(2));
    } else {
      if (!params.empty()) params += ',';
      params += item;
    }
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
  }
  if (family_name.empty()) throw Error(ErrorCode::kParseError, "kernel spec needs family=");
  if (x_text.empty()) throw Error(ErrorCode::kParseError, "kernel spec needs x=");
  if (family_name != "cos" && family_name != "expcos" && family_name != "semigroup-mix") {
    throw Error(ErrorCode::kUnsupportedFamily,
                "kernel family must be cos, expcos or semigroup-mix");
  }
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(x_text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != x_text.size() || !(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorCode::kParseError, "x must be a number in [0, 1]");
  }
  return {EigenFunction::parse(family_name + ":" + params, d), x};
}

}  // namespace gpc
