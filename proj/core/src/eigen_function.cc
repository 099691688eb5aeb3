#include "gpc/eigen_function.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include <boost/math/interpolators/makima.hpp>

#include "gpc/error.h"

namespace gpc {
namespace family {

class TableInterpolant {
 public:
  TableInterpolant(std::vector<double> t, std::vector<double> value)
      : spline_(std::move(t), std::move(value)) {}

  double operator()(double t) const { return spline_(t); }
  double prime(double t) const { return spline_.prime(t); }

 private:
  boost::math::interpolators::makima<std::vector<double>> spline_;
};

}  // namespace family

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr double kInf = std::numeric_limits<double>::infinity();

[[noreturn]] void parse_fail(const std::string& msg) {
  throw Error(ErrorCode::kParseError, msg);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    parse_fail("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::map<std::string, double, std::less<>> parse_params(std::string_view text) {
  std::map<std::string, double, std::less<>> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      parse_fail("expected key=value, got '" + std::string(item) + "'");
    }
    out.emplace(std::string(item.substr(0, eq)), parse_double(item.substr(eq + 1)));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  return out;
}

double take(const std::map<std::string, double, std::less<>>& params,
            std::string_view key) {
  const auto it = params.find(key);
  if (it == params.end()) parse_fail("missing parameter '" + std::string(key) + "'");
  return it->second;
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    parse_fail(std::string(name) + " must be positive and finite");
  }
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

EigenFunction EigenFunction::cos(double omega) {
  require_positive(omega, "omega");
  return EigenFunction(family::Cos{omega});
}

EigenFunction EigenFunction::exp_cos(double z, double omega) {
  require_positive(omega, "omega");
  if (!(z >= 0.0) || !std::isfinite(z)) parse_fail("Z must be >= 0 and finite");
  return EigenFunction(family::ExpCos{z, omega});
}

EigenFunction EigenFunction::semigroup_mix(double r, Dim d) {
  require_positive(r, "r");
  return EigenFunction(family::SemigroupMix{r, d.value()});
}

EigenFunction EigenFunction::exp(double r) {
  require_positive(r, "r");
  return EigenFunction(family::Exp{r});
}

EigenFunction EigenFunction::table(std::vector<double> t, std::vector<double> value) {
  if (t.size() != value.size() || t.size() < 4) {
    parse_fail("table needs at least 4 (t, lambda) samples");
  }
  if (t.front() != 0.0) parse_fail("table must start at t = 0");
  if (!std::is_sorted(t.begin(), t.end()) ||
      std::adjacent_find(t.begin(), t.end()) != t.end()) {
    parse_fail("table times must be strictly increasing");
  }
  if (std::abs(value.front() - 1.0) > kAlgebraTol) {
    parse_fail("table must satisfy lambda(0) = 1");
  }
  auto interp = std::make_shared<const family::TableInterpolant>(t, value);
  return EigenFunction(family::Table{std::move(t), std::move(value), std::move(interp)});
}

EigenFunction EigenFunction::table_from_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open table file " + path.string());
  std::string line;
  if (!std::getline(in, line)) parse_fail("table file is empty");
  if (const auto comma = line.find(','); comma != std::string::npos) {
    double probe = 0.0;
    const std::string head = trim(line.substr(0, comma));
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), probe);
    if (ec == std::errc() && ptr == head.data() + head.size()) {
      parse_fail("table file needs a header line (t,lambda)");
    }
  }
  std::vector<double> t, v;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      parse_fail("line " + std::to_string(line_no) + ": expected t,lambda");
    }
    t.push_back(parse_double(trim(line.substr(0, comma))));
    v.push_back(parse_double(trim(line.substr(comma + 1))));
  }
  return table(std::move(t), std::move(v));
}

EigenFunction EigenFunction::parse(std::string_view spec, Dim d) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    parse_fail("eigenfunction spec needs '<family>:<params>'");
  }
  const std::string_view name = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (name == "table") return table_from_csv(std::string(rest));
  const auto params = parse_params(rest);
  auto expect_keys = [&](std::initializer_list<std::string_view> keys) {
    for (const auto& [k, _] : params) {
      if (std::find(keys.begin(), keys.end(), k) == keys.end()) {
        parse_fail("unknown parameter '" + k + "' for " + std::string(name));
      }
    }
  };
  if (name == "cos") {
    expect_keys({"omega"});
    return cos(take(params, "omega"));
  }
  if (name == "expcos") {
    expect_keys({"Z", "omega"});
    return exp_cos(take(params, "Z"), take(params, "omega"));
  }
  if (name == "semigroup-mix") {
    expect_keys({"r"});
    return semigroup_mix(take(params, "r"), d);
  }
  if (name == "exp") {
    expect_keys({"r"});
    return exp(take(params, "r"));
  }
  parse_fail("unknown eigenfunction family '" + std::string(name) + "'");
}

bool EigenFunction::is_table() const noexcept {
  return std::holds_alternative<family::Table>(family_);
}

std::string EigenFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  std::visit(Overloaded{
                 [&](const family::Cos& f) { os << "cos:omega=" << f.omega; },
                 [&](const family::ExpCos& f) {
                   os << "expcos:Z=" << f.z << ",omega=" << f.omega;
                 },
                 [&](const family::SemigroupMix& f) {
                   os << "semigroup-mix:r=" << f.r << " (d=" << f.d << ")";
                 },
                 [&](const family::Exp& f) { os << "exp:r=" << f.r; },
                 [&](const family::Table& f) {
                   os << "table:" << f.t.size() << " samples on [0," << f.t.back()
                      << "]";
                 },
             },
             family_);
  return os.str();
}

void EigenFunction::check_domain(double t) const {
  if (const auto* tab = std::get_if<family::Table>(&family_)) {
    if (!(t >= tab->t.front() && t <= tab->t.back())) {
      throw Error(ErrorCode::kOutOfTableRange,
                  "t = " + std::to_string(t) + " outside table range [0, " +
                      std::to_string(tab->t.back()) + "]");
    }
  }
}

double EigenFunction::value(double t) const {
  check_domain(t);
  return std::visit(
      Overloaded{
          [t](const family::Cos& f) { return std::cos(f.omega * t); },
          [t](const family::ExpCos& f) {
            return std::exp(-f.z * t) * std::cos(f.omega * t);
          },
          [t](const family::SemigroupMix& f) {
            return ((f.d + 1.0) * std::exp(-f.r * t) - 1.0) / f.d;
          },
          [t](const family::Exp& f) { return std::exp(-f.r * t); },
          [t](const family::Table& f) { return (*f.interpolant)(t); },
      },
      family_);
}

double EigenFunction::derivative(double t) const {
  check_domain(t);
  return std::visit(
      Overloaded{
          [t](const family::Cos& f) { return -f.omega * std::sin(f.omega * t); },
          [t](const family::ExpCos& f) {
            return -std::exp(-f.z * t) *
                   (f.z * std::cos(f.omega * t) + f.omega * std::sin(f.omega * t));
          },
          [t](const family::SemigroupMix& f) {
            return -f.r * (f.d + 1.0) * std::exp(-f.r * t) / f.d;
          },
          [t](const family::Exp& f) { return -f.r * std::exp(-f.r * t); },
          [t](const family::Table& f) { return f.interpolant->prime(t); },
      },
      family_);
}

double EigenFunction::first_zero() const {
  return std::visit(
      Overloaded{
          [](const family::Cos& f) { return std::numbers::pi / (2.0 * f.omega); },
          [](const family::ExpCos& f) { return std::numbers::pi / (2.0 * f.omega); },
          [](const family::SemigroupMix& f) { return std::log(f.d + 1.0) / f.r; },
          [](const family::Exp&) { return kInf; },
          [this](const family::Table& f) {
            // sample-level sign change, then bisection on the interpolant
            for (std::size_t i = 1; i < f.t.size(); ++i) {
              if (f.value[i] == 0.0) return f.t[i];
              if (f.value[i - 1] > 0.0 && f.value[i] < 0.0) {
                double lo = f.t[i - 1], hi = f.t[i];
                for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
                  const double mid = 0.5 * (lo + hi);
                  if (mid <= lo || mid >= hi) break;
                  (value(mid) > 0.0 ? lo : hi) = mid;
                }
                return hi;
              }
            }
            return kInf;
          },
      },
      family_);
}

RangeReport check_range(const EigenFunction& f, Dim d, double t_max, double h) {
  constexpr double kSlack = 1e-9;
  const double lower = -1.0 / (d.value() - 1.0) - kSlack;
  const double upper = 1.0 + kSlack;
  RangeReport report;
  report.min_value = kInf;
  report.max_value = -kInf;
  const auto n = static_cast<long long>(std::llround(t_max / h));
  for (long long i = 0; i <= n; ++i) {
    const double t = std::min(static_cast<double>(i) * h, t_max);
    const double v = f.value(t);
    if (v < report.min_value) {
      report.min_value = v;
      report.t_at_min = t;
    }
    report.max_value = std::max(report.max_value, v);
  }
  report.within = report.min_value >= lower && report.max_value <= upper;
  return report;
}

}  // namespace gpc
