#pragma once

#include "spinchain/config.hpp"

namespace spinchain {

// mu = (sqrt(8 lambda + 1) - 1) / 4.
double analytic_mu(double lambda);

// Continuum bound-state level of the tangent well, constant offset dropped:
// E(n) = J pi^2 eta^2 (n^2 + 4 mu n), n >= 0. For lambda = 1 this is
// n(n+2) B0 / 2. Only spacings of this curve are ever compared against the
// lattice; the offset (see analytic_energy_offset) cancels there.
double analytic_energy(const ChainConfig& config, int level);

// The dropped constant, J pi^2 eta^2 (sqrt(8 lambda + 1) - 1). Reported
// separately and never used in spacing comparisons.
double analytic_energy_offset(const ChainConfig& config);

// Equal-spacing strong-field (lambda >> 1) level: E'(n) = 2 sqrt(2 lambda)
// J pi^2 eta^2 n. Computed for any lambda; meaningful in the harmonic limit.
double analytic_strong_field_energy(const ChainConfig& config, int level);

}  // namespace spinchain
