#include "gpc/channel.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "gpc/error.h"

namespace gpc {
namespace {

void check_length(const std::vector<double>& v, std::size_t expected,
                  const char* what) {
  if (v.size() != expected) {
    throw Error(ErrorCode::kInvalidDistribution,
                std::string(what) + " needs " + std::to_string(expected) +
                    " entries, got " + std::to_string(v.size()));
  }
}

void check_distribution(const std::vector<double>& p, Dim d) {
  check_length(p, d.slots() + 1, "probability vector");
  for (double pa : p) {
    if (!(pa >= 0.0)) {
      throw Error(ErrorCode::kInvalidDistribution,
                  "negative probability " + std::to_string(pa));
    }
  }
  const double total = std::accumulate(p.begin(), p.end(), 0.0);
  if (std::abs(total - 1.0) > kAlgebraTol) {
    throw Error(ErrorCode::kInvalidDistribution,
                "probabilities sum to " + std::to_string(total));
  }
}

}  // namespace

ChannelParams ChannelParams::from_probabilities(Dim d, std::vector<double> p) {
  check_distribution(p, d);
  return ChannelParams(d, Form::kProbabilities, std::move(p));
}

ChannelParams ChannelParams::from_eigenvalues(Dim d, std::vector<double> lambda) {
  check_length(lambda, d.slots(), "eigenvalue vector");
  return ChannelParams(d, Form::kEigenvalues, std::move(lambda));
}

std::vector<double> ChannelParams::probabilities() const {
  return form_ == Form::kProbabilities ? values_
                                       : eigenvalues_to_probabilities(values_, d_);
}

std::vector<double> ChannelParams::eigenvalues() const {
  return form_ == Form::kEigenvalues ? values_
                                     : probabilities_to_eigenvalues(values_, d_);
}

std::vector<double> probabilities_to_eigenvalues(const std::vector<double>& p, Dim d) {
  check_distribution(p, d);
  const double dd = d.value();
  std::vector<double> lambda(d.slots());
  for (int a = 1; a <= d.slots(); ++a) {
    lambda[a - 1] = (dd * (p[a] + p[0]) - 1.0) / (dd - 1.0);
  }
  return lambda;
}

std::vector<double> eigenvalues_to_probabilities(const std::vector<double>& lambda,
                                                 Dim d) {
  check_length(lambda, d.slots(), "eigenvalue vector");
  const double dd = d.value();
  const double sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  // p_a + p_0 = ((d-1) lambda_a + 1)/d; summing over a fixes p_0.
  std::vector<double> p(d.slots() + 1);
  p[0] = ((dd - 1.0) * sum + 1.0) / (dd * dd);
  for (int a = 1; a <= d.slots(); ++a) {
    p[a] = ((dd - 1.0) * lambda[a - 1] + 1.0) / dd - p[0];
  }
  return p;
}

CpReport fujiwara_algoet_check(const std::vector<double>& lambda, Dim d) {
  check_length(lambda, d.slots(), "eigenvalue vector");
  const double dd = d.value();
  const double sum = std::accumulate(lambda.begin(), lambda.end(), 0.0);
  const double min = *std::min_element(lambda.begin(), lambda.end());
  CpReport report;
  report.lower_slack = sum + 1.0 / (dd - 1.0);
  report.upper_slack = 1.0 + dd * min - sum;
  report.is_cp = report.lower_slack >= -kCpTol && report.upper_slack >= -kCpTol;
  return report;
}

CMatrix apply_linear(const ChannelParams& c, const UnitaryFamily& u, const CMatrix& x) {
  const std::vector<double> p = c.probabilities();
  const double dd = c.dim().value();
  CMatrix out = p[0] * x;
  for (int a = 1; a <= c.dim().slots(); ++a) {
    if (p[a] == 0.0) continue;
    out += (p[a] / (dd - 1.0)) * conjugation_map(u, a, x);
  }
  return out;
}

CMatrix apply_channel(const ChannelParams& c, const UnitaryFamily& u,
                      const CMatrix& rho) {
  constexpr double kStateTol = 1e-10;
  const int d = c.dim().value();
  if (rho.rows() != d || rho.cols() != d) {
    throw Error(ErrorCode::kInvalidState, "state has wrong shape");
  }
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
    throw Error(ErrorCode::kInvalidState, "state is not Hermitian");
  }
  if (std::abs(rho.trace() - Complex{1.0, 0.0}) > kStateTol) {
    throw Error(ErrorCode::kInvalidState, "state trace differs from 1");
  }
  return apply_linear(c, u, rho);
}

CMatrix choi_matrix(const ChannelParams& c, const UnitaryFamily& u) {
  const int d = c.dim().value();
  CMatrix choi = CMatrix::Zero(d * d, d * d);
  CMatrix eij = CMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      eij(i, j) = 1.0;
      choi.block(i * d, j * d, d, d) = apply_linear(c, u, eij);
      eij(i, j) = 0.0;
    }
  }
  return choi;
}

PsdCheck choi_psd_check(const CMatrix& choi, double tol) {
  if (choi.rows() != choi.cols() ||
      (choi - choi.adjoint()).cwiseAbs().maxCoeff() > tol) {
    throw Error(ErrorCode::kNonHermitianInput, "matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(choi, Eigen::EigenvaluesOnly);
  const double min = solver.eigenvalues().minCoeff();
  return {min >= -tol, min};
}

}  // namespace gpc
