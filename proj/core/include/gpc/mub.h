#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gpc {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

// Tolerance for identities that hold exactly in exact arithmetic.
inline constexpr double kAlgebraTol = 1e-12;

bool is_prime(int n);

// Prime Hilbert-space dimension. Constructing a Dim from a composite or
// sub-2 value throws Error{kNonPrimeDimension}.
class Dim {
 public:
  explicit Dim(int d);

  int value() const noexcept { return d_; }
  // Number of bases in a maximal MUB set (and of eigenvalue slots).
  int slots() const noexcept { return d_ + 1; }

  friend bool operator==(Dim, Dim) = default;

 private:
  int d_;
};

// d+1 pairwise unbiased orthonormal bases. basis(alpha) holds the vectors
// psi_k^(alpha) as columns k = 0..d-1; alpha runs over 1..d+1.
//
// Ordering: for d = 2 the slots are the sigma_x, sigma_y, sigma_z
// eigenbases. For odd primes slots 1..d are the quadratic-phase bases
// psi_k^(m)(j) = w^(m j^2 + k j)/sqrt(d), m = alpha-1, and slot d+1 is the
// computational basis.
class MubFamily {
 public:
  MubFamily(Dim d, std::vector<CMatrix> bases);

  Dim dim() const noexcept { return d_; }
  const CMatrix& basis(int alpha) const;
  const std::vector<CMatrix>& bases() const noexcept { return bases_; }

  // max over all (alpha,k),(beta,l) of
  // | |<psi_k^a|psi_l^b>|^2 - (delta_ab delta_kl + (1-delta_ab)/d) |.
  double max_deviation() const;

 private:
  Dim d_;
  std::vector<CMatrix> bases_;
};

// U_alpha = sum_l w^l P_l^(alpha) together with its powers U_alpha^k,
// k = 0..d-1, cached at construction.
class UnitaryFamily {
 public:
  explicit UnitaryFamily(const MubFamily& mubs);

  Dim dim() const noexcept { return d_; }
  const CMatrix& unitary(int alpha) const { return power(alpha, 1); }
  // U_alpha^k for 0 <= k < d.
  const CMatrix& power(int alpha, int k) const;

 private:
  Dim d_;
  std::vector<std::vector<CMatrix>> powers_;  // [alpha-1][k]
};

MubFamily build_mubs(Dim d);
UnitaryFamily build_unitaries(const MubFamily& mubs);

// sum_{k=1}^{d-1} U_a^k rho (U_a^k)^dagger.
CMatrix conjugation_map(const UnitaryFamily& u, int alpha, const CMatrix& rho);

// (1/d) [conjugation_map(rho) - (d-1) rho].
CMatrix generator_block(const UnitaryFamily& u, int alpha, const CMatrix& rho);

}  // namespace gpc
