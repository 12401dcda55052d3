#include "spinchain/hamiltonian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "spinchain/errors.hpp"

namespace spinchain {

namespace {
constexpr double kPi = std::numbers::pi;
}

void Hamiltonian::apply(const Eigen::VectorXcd& x, Eigen::VectorXcd& y) const {
  const int m = size();
  y.resize(m);
  for (int a = 0; a < m; ++a) {
    std::complex<double> acc = diagonal[a] * x[a];
    if (a > 0) acc += off_diagonal[a - 1] * x[a - 1];
    if (a + 1 < m) acc += off_diagonal[a] * x[a + 1];
    y[a] = acc;
  }
}

Eigen::VectorXd Hamiltonian::apply(const Eigen::VectorXd& x) const {
  const int m = size();
  Eigen::VectorXd y(m);
  for (int a = 0; a < m; ++a) {
    double acc = diagonal[a] * x[a];
    if (a > 0) acc += off_diagonal[a - 1] * x[a - 1];
    if (a + 1 < m) acc += off_diagonal[a] * x[a + 1];
    y[a] = acc;
  }
  return y;
}

Eigen::MatrixXd Hamiltonian::dense() const {
  const int m = size();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m, m);
  for (int a = 0; a < m; ++a) h(a, a) = diagonal[a];
  for (int a = 0; a + 1 < m; ++a) {
    h(a, a + 1) = off_diagonal[a];
    h(a + 1, a) = off_diagonal[a];
  }
  return h;
}

double potential_at(const ChainConfig& config, int site) {
  const double x = kPi * config.eta() * site;
  switch (config.potential) {
    case PotentialKind::Zero:
      return 0.0;
    case PotentialKind::Parabolic:
      return config.b0 * x * x;
    case PotentialKind::Tangent: {
      if (2.0 * std::abs(site) >= config.l_eff) {
        std::ostringstream msg;
        msg << "site " << site << " reaches the tan^2 singularity at |i| = L_eff/2 = "
            << config.l_eff / 2.0;
        throw ConfigError(msg.str());
      }
      const double t = std::tan(x);
      return config.b0 * t * t;
    }
  }
  return 0.0;
}

double hopping_amplitude(const ChainConfig& config) { return -config.j_coupling; }

Hamiltonian build_hamiltonian(const ChainConfig& config) {
  config.validate();
  const int m = config.site_count();
  Hamiltonian h;
  h.diagonal.resize(m);
  h.off_diagonal.assign(m - 1, hopping_amplitude(config));
  for (int a = 0; a < m; ++a) {
    h.diagonal[a] = potential_at(config, a - config.n_half);
  }
  return h;
}

}  // namespace spinchain
