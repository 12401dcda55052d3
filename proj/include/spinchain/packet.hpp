#pragma once

#include <Eigen/Core>

#include "spinchain/config.hpp"

namespace spinchain {

// Relation between the half-width Delta and the Gaussian exponent alpha:
// Delta = 2 sqrt(ln 2) / alpha.
double alpha_from_delta(double delta);
double delta_from_alpha(double alpha);

// Unit-norm single-excitation amplitude profile with Gaussian envelope
// exp(-alpha^2 (i - center)^2 / 2).
struct WavePacket {
  Eigen::VectorXcd amplitudes;  // site order -N..N, L2 norm 1
  int center = 0;               // N_A
  double alpha = 0.0;
  // Relative Gaussian weight lost to the open chain ends. Below 1e-10 the
  // truncation is silent; up to 1e-4 the packet is usable and carries
  // truncation_warning; above that construction throws ConfigError.
  double clipped_weight = 0.0;
  bool truncation_warning = false;

  int size() const { return static_cast<int>(amplitudes.size()); }
  int half_length() const { return (size() - 1) / 2; }
  double norm() const { return amplitudes.norm(); }
};

// Packet centred at `center` (|center| <= N) with half-width delta.
// `wavenumber` multiplies in a plane-wave phase e^{i k (i - center)}; the
// default 0 is the plain real Gaussian, the confining field alone drives the
// transfer. Throws std::invalid_argument for an off-chain centre or
// non-positive width, ConfigError when the clipped tail exceeds 1e-4.
WavePacket gaussian_packet(const ChainConfig& config, int center, double delta,
                           double wavenumber = 0.0);

// Same, parameterized by alpha directly.
WavePacket gaussian_packet_alpha(const ChainConfig& config, int center,
                                 double alpha, double wavenumber = 0.0);

}  // namespace spinchain
