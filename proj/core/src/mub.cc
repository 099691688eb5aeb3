#include "gpc/mub.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "gpc/error.h"

namespace gpc {
namespace {

Complex root_of_unity(int d, long long power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % d) / d;
  return std::polar(1.0, angle);
}

void check_alpha(Dim d, int alpha) {
  if (alpha < 1 || alpha > d.slots()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "basis index " + std::to_string(alpha) + " outside 1.." +
                    std::to_string(d.slots()));
  }
}

std::vector<CMatrix> pauli_eigenbases() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i{0.0, 1.0};
  CMatrix x(2, 2), y(2, 2), z(2, 2);
  // columns are eigenvectors for eigenvalue +1 then -1
  x << s, s, s, -s;
  y << s, s, i * s, -i * s;
  z << 1, 0, 0, 1;
  return {x, y, z};
}

std::vector<CMatrix> quadratic_phase_bases(int d) {
  std::vector<CMatrix> bases;
  bases.reserve(d + 1);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  for (int m = 0; m < d; ++m) {
    CMatrix b(d, d);
    for (int k = 0; k < d; ++k) {
      for (int j = 0; j < d; ++j) {
        const long long exponent = static_cast<long long>(m) * j * j +
                                   static_cast<long long>(k) * j;
        b(j, k) = norm * root_of_unity(d, exponent);
      }
    }
    bases.push_back(std::move(b));
  }
  bases.push_back(CMatrix::Identity(d, d));
  return bases;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) return false;
  }
  return true;
}

Dim::Dim(int d) : d_(d) {
  if (!is_prime(d)) {
    throw Error(ErrorCode::kNonPrimeDimension,
                "dimension must be prime, got " + std::to_string(d));
  }
}

MubFamily::MubFamily(Dim d, std::vector<CMatrix> bases)
    : d_(d), bases_(std::move(bases)) {}

const CMatrix& MubFamily::basis(int alpha) const {
  check_alpha(d_, alpha);
  return bases_[alpha - 1];
}

double MubFamily::max_deviation() const {
  const int d = d_.value();
  double worst = 0.0;
  for (std::size_t a = 0; a < bases_.size(); ++a) {
    for (std::size_t b = a; b < bases_.size(); ++b) {
      const CMatrix overlaps = bases_[a].adjoint() * bases_[b];
      for (int k = 0; k < d; ++k) {
        for (int l = 0; l < d; ++l) {
          const double target =
              a == b ? (k == l ? 1.0 : 0.0) : 1.0 / static_cast<double>(d);
          worst = std::max(worst, std::abs(std::norm(overlaps(k, l)) - target));
        }
      }
    }
  }
  return worst;
}

UnitaryFamily::UnitaryFamily(const MubFamily& mubs) : d_(mubs.dim()) {
  const int d = d_.value();
  powers_.reserve(d_.slots());
  for (const CMatrix& basis : mubs.bases()) {
    CVector phases(d);
    for (int l = 0; l < d; ++l) phases(l) = root_of_unity(d, l);
    const CMatrix u = basis * phases.asDiagonal() * basis.adjoint();
    std::vector<CMatrix> pw;
    pw.reserve(d);
    pw.push_back(CMatrix::Identity(d, d));
    for (int k = 1; k < d; ++k) pw.push_back(pw.back() * u);
    powers_.push_back(std::move(pw));
  }
}

const CMatrix& UnitaryFamily::power(int alpha, int k) const {
  check_alpha(d_, alpha);
  if (k < 0 || k >= d_.value()) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "power " + std::to_string(k) + " outside 0.." +
                    std::to_string(d_.value() - 1));
  }
  return powers_[alpha - 1][k];
}

MubFamily build_mubs(Dim d) {
  MubFamily family(d, d.value() == 2 ? pauli_eigenbases()
                                     : quadratic_phase_bases(d.value()));
  const double deviation = family.max_deviation();
  if (!(deviation <= kAlgebraTol)) {
    throw Error(ErrorCode::kConstructionFailure,
                "MUB verification failed, deviation " + std::to_string(deviation));
  }
  return family;
}

UnitaryFamily build_unitaries(const MubFamily& mubs) {
  UnitaryFamily u(mubs);
  const int d = mubs.dim().value();
  const CMatrix id = CMatrix::Identity(d, d);
  for (int alpha = 1; alpha <= mubs.dim().slots(); ++alpha) {
    const CMatrix& ua = u.unitary(alpha);
    const double unitarity = (ua.adjoint() * ua - id).cwiseAbs().maxCoeff();
    const double period = (u.power(alpha, d - 1) * ua - id).cwiseAbs().maxCoeff();
    if (!(unitarity <= kAlgebraTol && period <= kAlgebraTol)) {
      throw Error(ErrorCode::kConstructionFailure,
                  "U_" + std::to_string(alpha) + " failed unitarity check");
    }
  }
  return u;
}

CMatrix conjugation_map(const UnitaryFamily& u, int alpha, const CMatrix& rho) {
  check_alpha(u.dim(), alpha);
  const int d = u.dim().value();
  CMatrix out = CMatrix::Zero(d, d);
  for (int k = 1; k < d; ++k) {
    const CMatrix& uk = u.power(alpha, k);
    out.noalias() += uk * rho * uk.adjoint();
  }
  return out;
}

CMatrix generator_block(const UnitaryFamily& u, int alpha, const CMatrix& rho) {
  const double d = u.dim().value();
  return (conjugation_map(u, alpha, rho) - (d - 1.0) * rho) / d;
}

}  // namespace gpc
