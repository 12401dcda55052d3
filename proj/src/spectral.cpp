#include "spinchain/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinchain/errors.hpp"
#include "spinchain/reflection.hpp"

namespace spinchain {

namespace {

// Flip signs so the largest-magnitude component is positive; keeps emitted
// eigenvectors reproducible across runs.
void canonicalize_sign(Eigen::Ref<Eigen::VectorXd> v) {
  int imax = 0;
  double best = 0.0;
  for (int a = 0; a < v.size(); ++a) {
    const double mag = std::abs(v[a]);
    if (mag > best) {
      best = mag;
      imax = a;
    }
  }
  if (v[imax] < 0.0) v = -v;
}

// Rotate a near-degenerate eigenvalue cluster onto definite-parity
// combinations. The cluster subspace is reflection-invariant (the matrix
// commutes with reflection), so even and odd projections of its vectors span
// it; Gram-Schmidt with a norm cutoff picks an orthonormal definite-parity
// basis.
void fix_cluster_parity(Eigen::MatrixXd& vecs, int lo, int hi) {
  const int count = hi - lo + 1;
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(count);
  for (int pass = 0; pass < 2 && static_cast<int>(basis.size()) < count; ++pass) {
    for (int k = lo; k <= hi && static_cast<int>(basis.size()) < count; ++k) {
      const Eigen::VectorXd v = vecs.col(k);
      const Eigen::VectorXd pv = reflected(v);
      Eigen::VectorXd cand = pass == 0 ? Eigen::VectorXd(0.5 * (v + pv))
                                       : Eigen::VectorXd(0.5 * (v - pv));
      for (const auto& b : basis) cand -= b.dot(cand) * b;
      const double norm = cand.norm();
      if (norm > 0.25) {
        basis.push_back(cand / norm);
      }
    }
  }
  if (static_cast<int>(basis.size()) == count) {
    for (int k = 0; k < count; ++k) vecs.col(lo + k) = basis[k];
  }
}

void fit_polynomial(const Eigen::VectorXd& x, const Eigen::VectorXd& y, int degree,
                    Eigen::VectorXd& coeffs) {
  Eigen::MatrixXd a(x.size(), degree + 1);
  for (int r = 0; r < x.size(); ++r) {
    double p = 1.0;
    for (int c = 0; c <= degree; ++c) {
      a(r, c) = p;
      p *= x[r];
    }
  }
  coeffs = a.colPivHouseholderQr().solve(y);
}

}  // namespace

ParityResult eigenstate_parity(const Eigen::VectorXd& v, double threshold) {
  if (v.size() % 2 == 0) {
    throw std::invalid_argument("parity needs an odd-length vector");
  }
  const double norm2 = v.squaredNorm();
  if (!(norm2 > 0.0)) {
    throw std::invalid_argument("parity of a zero vector is undefined");
  }
  double overlap = 0.0;
  const int m = static_cast<int>(v.size());
  for (int a = 0; a < m; ++a) overlap += v[a] * v[m - 1 - a];
  overlap /= norm2;
  ParityResult r;
  r.confidence = std::abs(overlap);
  r.sign = r.confidence > threshold ? (overlap > 0.0 ? 1 : -1) : 0;
  return r;
}

SpectralData diagonalize(const Hamiltonian& h, double parity_threshold) {
  const int m = h.size();
  if (m < 1) throw std::invalid_argument("empty Hamiltonian");
  if (m % 2 == 0) throw std::invalid_argument("chain must have an odd site count");

  SpectralData s;
  if (m == 1) {
    s.energies = Eigen::VectorXd::Constant(1, h.diagonal[0]);
    s.eigenvectors = Eigen::MatrixXd::Identity(1, 1);
    s.parities = {1};
    s.parity_confidence = {1.0};
    return s;
  }

  Eigen::Map<const Eigen::VectorXd> diag(h.diagonal.data(), m);
  Eigen::Map<const Eigen::VectorXd> sub(h.off_diagonal.data(), m - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "tridiagonal eigensolver exhausted its iteration budget on a " << m << "x" << m
        << " matrix";
    throw ConvergenceError(msg.str());
  }
  s.energies = solver.eigenvalues();
  s.eigenvectors = solver.eigenvectors();

  const double cluster_gap = 1e-12 * s.energies.cwiseAbs().maxCoeff();
  int k = 0;
  while (k < m - 1) {
    int hi = k;
    while (hi < m - 1 && s.energies[hi + 1] - s.energies[hi] < cluster_gap) ++hi;
    if (hi > k) fix_cluster_parity(s.eigenvectors, k, hi);
    k = hi + 1;
  }

  s.parities.resize(m);
  s.parity_confidence.resize(m);
  for (int n = 0; n < m; ++n) {
    canonicalize_sign(s.eigenvectors.col(n));
    const ParityResult p = eigenstate_parity(s.eigenvectors.col(n), parity_threshold);
    s.parities[n] = p.sign;
    s.parity_confidence[n] = p.confidence;
  }
  return s;
}

std::vector<double> level_spacings(const SpectralData& s) {
  if (s.size() < 2) throw std::invalid_argument("need at least 2 levels for spacings");
  std::vector<double> d(s.size() - 1);
  for (int n = 0; n + 1 < s.size(); ++n) d[n] = s.energies[n + 1] - s.energies[n];
  return d;
}

SpmcReport spmc_check(const SpectralData& s, int n_max, SpectrumModel model,
                      double extent_tolerance) {
  const int min_levels = model == SpectrumModel::Quadratic ? 2 : 1;
  if (n_max < min_levels) {
    throw std::invalid_argument("n_max too small for the requested fit model");
  }
  if (n_max >= s.size()) {
    throw std::invalid_argument("n_max exceeds the number of levels");
  }

  SpmcReport report;
  const int count = n_max + 1;
  Eigen::VectorXd x(count), y(count);
  for (int n = 0; n < count; ++n) {
    x[n] = n;
    y[n] = s.energies[n];
  }
  const int degree = model == SpectrumModel::Quadratic ? 2 : 1;
  Eigen::VectorXd coeffs;
  fit_polynomial(x, y, degree, coeffs);
  report.c0 = coeffs[0];
  report.c1 = coeffs[1];
  report.c2 = degree == 2 ? coeffs[2] : 0.0;

  const double mean_spacing = (s.energies[n_max] - s.energies[0]) / n_max;
  double worst = 0.0;
  for (int n = 0; n < count; ++n) {
    const double fit = report.c0 + report.c1 * n + report.c2 * n * n;
    worst = std::max(worst, std::abs(y[n] - fit));
  }
  report.max_relative_residual = worst / mean_spacing;

  report.parity_alternation_ok = true;
  for (int n = 0; n < n_max; ++n) {
    if (s.parities[n] * s.parities[n + 1] != -1) {
      report.parity_alternation_ok = false;
      break;
    }
  }

  // Spacing-law window: affine in n for a quadratic spectrum, constant for a
  // linear one. Grown until the RMS residual exceeds the tolerance relative
  // to the window's mean spacing.
  const std::vector<double> d = level_spacings(s);
  const int w_cap = std::min<int>(n_max - 1, static_cast<int>(d.size()) - 1);
  int extent = 0;
  for (int w = 2; w <= w_cap; ++w) {
    const int points = w + 1;
    double mean = 0.0;
    for (int n = 0; n <= w; ++n) mean += d[n];
    mean /= points;
    double rss = 0.0;
    if (model == SpectrumModel::Quadratic) {
      // Closed-form affine fit of d over n = 0..w.
      double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
      for (int n = 0; n <= w; ++n) {
        sx += n;
        sy += d[n];
        sxx += static_cast<double>(n) * n;
        sxy += n * d[n];
      }
      const double det = points * sxx - sx * sx;
      const double slope = (points * sxy - sx * sy) / det;
      const double icept = (sy - slope * sx) / points;
      for (int n = 0; n <= w; ++n) {
        const double r = d[n] - (icept + slope * n);
        rss += r * r;
      }
    } else {
      for (int n = 0; n <= w; ++n) {
        const double r = d[n] - mean;
        rss += r * r;
      }
    }
    const double rms = std::sqrt(rss / points);
    if (rms > extent_tolerance * mean) break;
    extent = w;
  }
  report.quadratic_extent = extent;
  return report;
}

}  // namespace spinchain
