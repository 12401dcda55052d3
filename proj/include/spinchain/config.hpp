#pragma once

#include <optional>
#include <string>

namespace spinchain {

enum class PotentialKind { Tangent, Parabolic, Zero };

const char* to_string(PotentialKind kind);
PotentialKind potential_from_string(const std::string& name);

// Field amplitude B0 = 2 lambda J pi^2 eta^2 with eta = 1/L_eff.
double derive_b0(double lambda, double j, double l_eff);

// Inverse of derive_b0: lambda = B0 L_eff^2 / (2 J pi^2).
double lambda_from_b0(double b0, double j, double l_eff);

// Largest half-length that keeps every site strictly inside the region where
// tan^2(pi eta i) is finite: N = ceil(L_eff/2) - 1.
int default_half_length(double l_eff);

// Physical parameters of one confined-chain run. J = 1 is the unit of energy
// and, with hbar = 1, times are in 1/J. lambda and b0 are stored redundantly;
// the factories derive one from the other, and validate() rejects an
// inconsistent pair.
struct ChainConfig {
  double j_coupling = 1.0;
  double lambda = 1.0;
  double b0 = 0.0;
  double l_eff = 0.0;
  int n_half = 0;
  PotentialKind potential = PotentialKind::Tangent;

  static ChainConfig with_lambda(double lambda, double l_eff, double j = 1.0,
                                 std::optional<int> n_half = std::nullopt,
                                 PotentialKind kind = PotentialKind::Tangent);
  static ChainConfig with_b0(double b0, double l_eff, double j = 1.0,
                             std::optional<int> n_half = std::nullopt,
                             PotentialKind kind = PotentialKind::Tangent);

  int site_count() const { return 2 * n_half + 1; }
  double eta() const { return 1.0 / l_eff; }

  // Quadratic-regime revival time tau = 2 pi / B0.
  double revival_time() const;

  // Throws ConfigError unless all invariants hold: positive parameters,
  // l_eff > 2, 1 <= n_half <= ceil(l_eff/2) - 1, and b0 consistent with
  // lambda to a relative 1e-12.
  void validate() const;

  // Short deterministic hash of the resolved parameters, used to stamp
  // emitted tables.
  std::string fingerprint() const;
};

}  // namespace spinchain
