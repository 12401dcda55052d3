#pragma once

#include <Eigen/Core>
#include <vector>

#include "spinchain/config.hpp"

namespace spinchain {

// Effective single-excitation Hamiltonian: a real symmetric tridiagonal
// matrix over sites i = -N..N with the confining field on the diagonal and a
// uniform hopping amplitude -J on the off-diagonal, so the zero-field band is
// -2J cos k. That normalization is what the tangent-field results are built
// around: level spacings with slope B0 at lambda = 1, revival time
// tau = 2 pi / B0, and the strong-field spacing 2 pi eta sqrt(B0 J).
struct Hamiltonian {
  std::vector<double> diagonal;      // on-site potential, size M = 2N+1
  std::vector<double> off_diagonal;  // uniform -J, size M-1

  int size() const { return static_cast<int>(diagonal.size()); }
  int half_length() const { return (size() - 1) / 2; }

  // y = H x for complex amplitudes (tridiagonal matvec).
  void apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const;
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const;

  // Dense copy, for small-matrix cross-checks.
  Eigen::MatrixXd dense() const;
};

// On-site field at site i (|i| <= N): Tangent -> B0 tan^2(pi eta i),
// Parabolic -> B0 (pi eta i)^2, Zero -> 0. Even in i. Throws ConfigError when
// |i| >= L_eff/2 (the tangent singularity), unreachable through a validated
// config.
double potential_at(const ChainConfig& config, int site);

// Uniform hopping amplitude entering the off-diagonal: -J.
double hopping_amplitude(const ChainConfig& config);

Hamiltonian build_hamiltonian(const ChainConfig& config);

}  // namespace spinchain
