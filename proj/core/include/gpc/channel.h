#pragma once

#include <optional>
#include <vector>

#include "gpc/mub.h"

namespace gpc {

// Slack used when deciding complete positivity from eigenvalues.
inline constexpr double kCpTol = 1e-10;

// A generalized Pauli channel, stored in the form it was given in.
// Probabilities are (p_0, p_1, ..., p_{d+1}); eigenvalues are
// (lambda_1, ..., lambda_{d+1}) with lambda_0 = 1 implicit.
class ChannelParams {
 public:
  enum class Form { kProbabilities, kEigenvalues };

  // Throws Error{kInvalidDistribution} unless p >= 0 and sum p = 1 (1e-12).
  static ChannelParams from_probabilities(Dim d, std::vector<double> p);
  static ChannelParams from_eigenvalues(Dim d, std::vector<double> lambda);

  Dim dim() const noexcept { return d_; }
  Form form() const noexcept { return form_; }
  const std::vector<double>& stored() const noexcept { return values_; }

  std::vector<double> probabilities() const;
  std::vector<double> eigenvalues() const;

 private:
  ChannelParams(Dim d, Form form, std::vector<double> values)
      : d_(d), form_(form), values_(std::move(values)) {}

  Dim d_;
  Form form_;
  std::vector<double> values_;
};

struct CpReport {
  bool is_cp = false;
  double lower_slack = 0.0;  // sum lambda + 1/(d-1)
  double upper_slack = 0.0;  // 1 + d min lambda - sum lambda
  std::optional<double> choi_min_eigenvalue;
};

struct PsdCheck {
  bool is_psd = false;
  double min_eigenvalue = 0.0;
};

std::vector<double> probabilities_to_eigenvalues(const std::vector<double>& p, Dim d);

// Exact inverse of probabilities_to_eigenvalues; entries come out negative
// when lambda lies outside the CP region.
std::vector<double> eigenvalues_to_probabilities(const std::vector<double>& lambda,
                                                 Dim d);

CpReport fujiwara_algoet_check(const std::vector<double>& lambda, Dim d);

// p_0 X + 1/(d-1) sum_a p_a U_a[X] for an arbitrary operator X.
CMatrix apply_linear(const ChannelParams& c, const UnitaryFamily& u, const CMatrix& x);

// apply_linear restricted to density matrices: rho must be Hermitian with
// unit trace (1e-10), otherwise Error{kInvalidState}.
CMatrix apply_channel(const ChannelParams& c, const UnitaryFamily& u,
                      const CMatrix& rho);

// sum_{ij} |i><j| (x) Lambda(|i><j|), i.e. d (id (x) Lambda)(|Omega><Omega|).
CMatrix choi_matrix(const ChannelParams& c, const UnitaryFamily& u);

PsdCheck choi_psd_check(const CMatrix& choi, double tol);

}  // namespace gpc
