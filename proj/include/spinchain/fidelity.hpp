#pragma once

#include <string>
#include <vector>

#include "spinchain/evolve.hpp"

namespace spinchain {

// Transfer fidelity |<reflect(psi_initial), psi_t>|: overlap of the evolved
// state with the mirror image of the initial packet.
double fidelity(const WavePacket& psi_initial, const WavePacket& psi_t);

struct FidelitySample {
  double t = 0.0;
  double f = 0.0;
};

struct FidelitySeries {
  std::vector<FidelitySample> samples;  // strictly increasing t
  std::string fingerprint;              // config hash
  // Conservation diagnostics from reconstructed states at evenly strided
  // checkpoints (at most 128 per series, endpoints always included).
  double max_norm_drift = 0.0;
  double max_energy_drift = 0.0;  // relative to |<H>| at t = t_grid[0]
};

// F evaluated on a strictly increasing grid, one decomposition reused across
// all samples. Throws std::invalid_argument for a non-increasing grid.
FidelitySeries fidelity_series(const ChainConfig& config, const SpectralData& s,
                               const Hamiltonian& h, const WavePacket& psi,
                               const std::vector<double>& t_grid);

// Convenience overload that builds the Hamiltonian and its decomposition.
FidelitySeries fidelity_series(const ChainConfig& config, const WavePacket& psi,
                               const std::vector<double>& t_grid);

struct PeakResult {
  double t_star = 0.0;
  double f_star = 0.0;
};

// Maximal fidelity in [t_lo, t_hi]: coarse scan at resolution
// (t_hi - t_lo) / coarse_samples, then golden-section refinement of the best
// bracket down to a time resolution of 1e-6 (t_hi - t_lo).
PeakResult find_max_fidelity(const SpectralData& s, const WavePacket& psi,
                             double t_lo, double t_hi, int coarse_samples = 2000);

PeakResult find_max_fidelity(const ChainConfig& config, const WavePacket& psi,
                             double t_lo, double t_hi, int coarse_samples = 2000);

}  // namespace spinchain
