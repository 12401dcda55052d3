#include "spinchain/fidelity.hpp"

#include <cmath>
#include <stdexcept>

#include "spinchain/reflection.hpp"

namespace spinchain {

namespace {

// Fidelity against the mirror target in the energy eigenbasis:
// F(t) = |sum_n conj(w_n) e^{-i E_n t} c_n| with c = V^T psi0 and
// w = V^T reflect(psi0). One O(M) sum per time sample.
struct MirrorOverlap {
  Eigen::VectorXd energies;
  Eigen::VectorXcd c;
  Eigen::VectorXcd w;

  MirrorOverlap(const SpectralData& s, const WavePacket& psi)
      : energies(s.energies),
        c(s.eigenvectors.transpose() * psi.amplitudes),
        w(s.eigenvectors.transpose() * reflected(psi.amplitudes)) {}

  double operator()(double t) const {
    std::complex<double> acc = 0.0;
    for (int n = 0; n < energies.size(); ++n) {
      acc += std::conj(w[n]) * std::polar(1.0, -energies[n] * t) * c[n];
    }
    return std::abs(acc);
  }
};

}  // namespace

double fidelity(const WavePacket& psi_initial, const WavePacket& psi_t) {
  if (psi_initial.size() != psi_t.size()) {
    throw std::invalid_argument("packet dimensions differ");
  }
  const Eigen::VectorXcd target = reflected(psi_initial.amplitudes);
  return std::abs(target.dot(psi_t.amplitudes));
}

FidelitySeries fidelity_series(const ChainConfig& config, const SpectralData& s,
                               const Hamiltonian& h, const WavePacket& psi,
                               const std::vector<double>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("empty time grid");
  for (std::size_t k = 1; k < t_grid.size(); ++k) {
    if (!(t_grid[k] > t_grid[k - 1])) {
      throw std::invalid_argument("time grid must be strictly increasing");
    }
  }

  const MirrorOverlap overlap(s, psi);
  FidelitySeries series;
  series.fingerprint = config.fingerprint();
  series.samples.reserve(t_grid.size());
  for (const double t : t_grid) {
    series.samples.push_back({t, overlap(t)});
  }

  // Conservation diagnostics from fully reconstructed states at strided
  // checkpoints (every series includes both endpoints).
  const std::size_t stride = std::max<std::size_t>(1, t_grid.size() / 128);
  const double e0 = energy_expectation(h, evolve_spectral(s, psi, t_grid.front()));
  const double scale = std::max(std::abs(e0), 1e-300);
  for (std::size_t k = 0; k < t_grid.size(); k += stride) {
    const std::size_t idx = std::min(k, t_grid.size() - 1);
    const WavePacket state = evolve_spectral(s, psi, t_grid[idx]);
    series.max_norm_drift =
        std::max(series.max_norm_drift, std::abs(state.norm() - 1.0));
    series.max_energy_drift =
        std::max(series.max_energy_drift,
                 std::abs(energy_expectation(h, state) - e0) / scale);
  }
  const WavePacket last = evolve_spectral(s, psi, t_grid.back());
  series.max_norm_drift = std::max(series.max_norm_drift, std::abs(last.norm() - 1.0));
  series.max_energy_drift =
      std::max(series.max_energy_drift,
               std::abs(energy_expectation(h, last) - e0) / scale);
  return series;
}

FidelitySeries fidelity_series(const ChainConfig& config, const WavePacket& psi,
                               const std::vector<double>& t_grid) {
  const Hamiltonian h = build_hamiltonian(config);
  return fidelity_series(config, diagonalize(h), h, psi, t_grid);
}

PeakResult find_max_fidelity(const SpectralData& s, const WavePacket& psi, double t_lo,
                             double t_hi, int coarse_samples) {
  if (!(t_lo < t_hi)) throw std::invalid_argument("window needs t_lo < t_hi");
  if (coarse_samples < 2) throw std::invalid_argument("need at least 2 coarse samples");

  const MirrorOverlap overlap(s, psi);
  const double step = (t_hi - t_lo) / coarse_samples;
  int best = 0;
  double best_f = -1.0;
  for (int k = 0; k <= coarse_samples; ++k) {
    const double f = overlap(t_lo + k * step);
    if (f > best_f) {
      best_f = f;
      best = k;
    }
  }

  // Golden-section refinement of the best coarse bracket down to a time
  // resolution of 1e-6 of the window.
  double a = t_lo + std::max(best - 1, 0) * step;
  double b = t_lo + std::min(best + 1, coarse_samples) * step;
  const double resolution = 1e-6 * (t_hi - t_lo);
  constexpr double inv_golden = 0.6180339887498949;
  double x1 = b - inv_golden * (b - a);
  double x2 = a + inv_golden * (b - a);
  double f1 = overlap(x1);
  double f2 = overlap(x2);
  while (b - a > resolution) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_golden * (b - a);
      f2 = overlap(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_golden * (b - a);
      f1 = overlap(x1);
    }
  }
  PeakResult peak;
  peak.t_star = 0.5 * (a + b);
  peak.f_star = overlap(peak.t_star);
  if (best_f > peak.f_star) {
    peak.t_star = t_lo + best * step;
    peak.f_star = best_f;
  }
  return peak;
}

PeakResult find_max_fidelity(const ChainConfig& config, const WavePacket& psi,
                             double t_lo, double t_hi, int coarse_samples) {
  return find_max_fidelity(diagonalize(build_hamiltonian(config)), psi, t_lo, t_hi,
                           coarse_samples);
}

}  // namespace spinchain
