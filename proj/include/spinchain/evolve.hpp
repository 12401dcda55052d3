#pragma once

#include "spinchain/hamiltonian.hpp"
#include "spinchain/packet.hpp"
#include "spinchain/spectral.hpp"

namespace spinchain {

// psi(t) = sum_n e^{-i E_n t} <v_n|psi> v_n. The workhorse propagator: one
// decomposition amortizes over any number of times.
WavePacket evolve_spectral(const SpectralData& s, const WavePacket& psi, double t);

struct ChebyshevOptions {
  // Expansion is truncated at the first order whose coefficient magnitude
  // stays below this cutoff.
  double coefficient_cutoff = 1e-14;
  // Hard cap on the expansion order; exceeding it raises BudgetError so the
  // caller can split t.
  long max_order = 4000000;
};

// Independent propagator: Chebyshev polynomial expansion of e^{-iHt} on the
// Gershgorin interval of H, with Bessel-function coefficients from a
// normalized backward recurrence. Agrees with evolve_spectral to ~1e-10 and
// never builds eigenvectors.
WavePacket evolve_chebyshev(const Hamiltonian& h, const WavePacket& psi, double t,
                            const ChebyshevOptions& options = {});

// <psi|H|psi> (real part; exact for Hermitian H).
double energy_expectation(const Hamiltonian& h, const WavePacket& psi);

}  // namespace spinchain
