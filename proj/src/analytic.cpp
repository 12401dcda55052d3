#include "spinchain/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinchain {

namespace {
constexpr double kPi = std::numbers::pi;

double energy_scale(const ChainConfig& config) {
  const double eta = config.eta();
  return config.j_coupling * kPi * kPi * eta * eta;
}
}  // namespace

double analytic_mu(double lambda) {
  return 0.25 * (std::sqrt(8.0 * lambda + 1.0) - 1.0);
}

double analytic_energy(const ChainConfig& config, int level) {
  if (level < 0) throw std::invalid_argument("level index must be non-negative");
  const double n = level;
  return energy_scale(config) * (n * n + 4.0 * analytic_mu(config.lambda) * n);
}

double analytic_energy_offset(const ChainConfig& config) {
  return energy_scale(config) * (std::sqrt(8.0 * config.lambda + 1.0) - 1.0);
}

double analytic_strong_field_energy(const ChainConfig& config, int level) {
  if (level < 0) throw std::invalid_argument("level index must be non-negative");
  return 2.0 * std::sqrt(2.0 * config.lambda) * energy_scale(config) * level;
}

}  // namespace spinchain
