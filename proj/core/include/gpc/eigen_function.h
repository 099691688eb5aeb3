#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gpc/mub.h"

namespace gpc {

namespace family {

// lambda(t) = cos(omega t)
struct Cos {
  double omega;
};
// lambda(t) = exp(-Z t) cos(omega t)
struct ExpCos {
  double z;
  double omega;
};
// lambda(t) = ((d+1) exp(-r t) - 1)/d; mixes into exp(-r t) at uniform weights.
struct SemigroupMix {
  double r;
  int d;
};
// lambda(t) = exp(-r t)
struct Exp {
  double r;
};

class TableInterpolant;

// Tabulated samples with a piecewise-cubic interpolant.
struct Table {
  std::vector<double> t;
  std::vector<double> value;
  std::shared_ptr<const TableInterpolant> interpolant;
};

}  // namespace family

// Scalar eigenvalue function lambda(t) of the single-basis maps, with
// lambda(0) = 1. Catalog families are evaluated in closed form.
class EigenFunction {
 public:
  using Family = std::variant<family::Cos, family::ExpCos, family::SemigroupMix,
                              family::Exp, family::Table>;

  static EigenFunction cos(double omega);
  static EigenFunction exp_cos(double z, double omega);
  static EigenFunction semigroup_mix(double r, Dim d);
  static EigenFunction exp(double r);
  // Needs >= 4 strictly increasing samples starting at t = 0 with value 1.
  static EigenFunction table(std::vector<double> t, std::vector<double> value);
  // CSV with a header line and two columns t,lambda.
  static EigenFunction table_from_csv(const std::filesystem::path& path);

  // Grammar: cos:omega=<f> | expcos:Z=<f>,omega=<f> | semigroup-mix:r=<f>
  //          | exp:r=<f> | table:<path>
  // semigroup-mix takes its dimension from `d`.
  static EigenFunction parse(std::string_view spec, Dim d);

  const Family& family() const noexcept { return family_; }
  bool is_table() const noexcept;
  std::string describe() const;

  double value(double t) const;
  double derivative(double t) const;

  // Smallest t > 0 with lambda(t) = 0 (closed form for catalog families,
  // scanned for tables); +infinity if there is none.
  double first_zero() const;

 private:
  explicit EigenFunction(Family f) : family_(std::move(f)) {}
  void check_domain(double t) const;

  Family family_;
};

struct RangeReport {
  bool within = true;
  double min_value = 0.0;
  double max_value = 0.0;
  double t_at_min = 0.0;
};

// Checks -1/(d-1) - 1e-9 <= lambda(t) <= 1 + 1e-9 on the grid 0, h, ..., t_max.
RangeReport check_range(const EigenFunction& f, Dim d, double t_max, double h);

}  // namespace gpc
