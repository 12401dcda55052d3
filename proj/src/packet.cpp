#include "spinchain/packet.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "spinchain/errors.hpp"

namespace spinchain {

double alpha_from_delta(double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("packet width must be positive");
  return 2.0 * std::sqrt(std::numbers::ln2_v<double>) / delta;
}

double delta_from_alpha(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  return 2.0 * std::sqrt(std::numbers::ln2_v<double>) / alpha;
}

WavePacket gaussian_packet_alpha(const ChainConfig& config, int center, double alpha,
                                 double wavenumber) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const int n = config.n_half;
  if (std::abs(center) > n) {
    std::ostringstream msg;
    msg << "packet centre " << center << " is off the chain (|i| <= " << n << ")";
    throw std::invalid_argument(msg.str());
  }

  // Weight of the infinite-lattice envelope falling outside the chain. The
  // envelope below exp(-98) contributes nothing at double precision.
  const int reach = static_cast<int>(std::ceil(14.0 / alpha));
  double total = 0.0;
  double inside = 0.0;
  for (int i = center - reach; i <= center + reach; ++i) {
    const double dx = i - center;
    const double w = std::exp(-alpha * alpha * dx * dx);
    total += w;
    if (std::abs(i) <= n) inside += w;
  }
  const double clipped = (total - inside) / total;
  if (clipped > 1e-4) {
    std::ostringstream msg;
    msg << "packet tail does not fit the chain: clipped weight " << clipped
        << " exceeds 1e-4 (centre " << center << ", alpha " << alpha << ", N " << n << ")";
    throw ConfigError(msg.str());
  }

  WavePacket p;
  p.center = center;
  p.alpha = alpha;
  p.clipped_weight = clipped;
  p.truncation_warning = clipped > 1e-10;
  p.amplitudes.resize(2 * n + 1);
  for (int a = 0; a < 2 * n + 1; ++a) {
    const double dx = (a - n) - center;
    const double envelope = std::exp(-0.5 * alpha * alpha * dx * dx);
    p.amplitudes[a] = std::polar(envelope, wavenumber * dx);
  }
  p.amplitudes /= p.amplitudes.norm();
  return p;
}

WavePacket gaussian_packet(const ChainConfig& config, int center, double delta,
                           double wavenumber) {
  return gaussian_packet_alpha(config, center, alpha_from_delta(delta), wavenumber);
}

}  // namespace spinchain
