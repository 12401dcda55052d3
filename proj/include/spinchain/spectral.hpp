#pragma once

#include <Eigen/Core>
#include <vector>

#include "spinchain/hamiltonian.hpp"

namespace spinchain {

struct ParityResult {
  int sign = 0;             // +1 even, -1 odd, 0 indeterminate
  double confidence = 0.0;  // |sum_i v_i v_{-i}| in [0, 1]
};

// Full eigensystem of the tridiagonal Hamiltonian. Energies ascend;
// eigenvector column n pairs with energies[n]. parities[n] is 0 where the
// reflection overlap falls below the confidence threshold.
struct SpectralData {
  Eigen::VectorXd energies;
  Eigen::MatrixXd eigenvectors;
  std::vector<int> parities;
  std::vector<double> parity_confidence;

  int size() const { return static_cast<int>(energies.size()); }
};

// Reflection character of a single unit-norm eigenvector of odd length:
// confidence = |sum_i v_i v_{-i}|, sign taken from the sum when the
// confidence exceeds the threshold, indeterminate (0) otherwise.
// Throws std::invalid_argument for a zero vector or even length.
ParityResult eigenstate_parity(const Eigen::VectorXd& v, double threshold = 0.99);

// Eigendecomposition with parity labels. Eigenvalue clusters closer than
// 1e-12 * max|E| are rotated onto definite-parity combinations and
// re-orthonormalized before labelling, so parities stay stable under
// degeneracy. Throws ConvergenceError if the iteration budget is exhausted.
SpectralData diagonalize(const Hamiltonian& h, double parity_threshold = 0.99);

// D(n) = E_{n+1} - E_n for n = 0 .. size-2.
std::vector<double> level_spacings(const SpectralData& s);

enum class SpectrumModel { Quadratic, Linear };

struct SpmcReport {
  // Least-squares coefficients of E_n ~ c2 n^2 + c1 n + c0 over 0..n_max
  // (c2 = 0 for the linear model).
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
  // max_n |E_n - fit(n)| / mean spacing over the fit window.
  double max_relative_residual = 0.0;
  // Parities alternate with confidence over the window.
  bool parity_alternation_ok = false;
  // Largest window 0..w over which the level spacings follow the model's
  // spacing law (affine in n for Quadratic, constant for Linear) with RMS
  // residual at most tol * mean spacing.
  int quadratic_extent = 0;
};

// Dispersion diagnostics over levels 0..n_max. Quadratic model requires
// n_max >= 2, linear n_max >= 1; throws std::invalid_argument otherwise.
SpmcReport spmc_check(const SpectralData& s, int n_max, SpectrumModel model,
                      double extent_tolerance = 1e-2);

}  // namespace spinchain
