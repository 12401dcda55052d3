#include <doctest.h>

#include <cmath>

#include "spinchain/fidelity.hpp"
#include "spinchain/packet.hpp"

using namespace spinchain;

TEST_CASE("a centred packet has unit fidelity at t = 0") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const WavePacket psi = gaussian_packet(c, 0, 8.0);
  CHECK(fidelity(psi, psi) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("well-separated packets start with vanishing fidelity") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const WavePacket psi = gaussian_packet(c, 30, 8.0);
  const double f0 = fidelity(psi, psi);
  // closed-form Gaussian overlap exp(-alpha^2 N_A^2) ~ 1.2e-17
  const double expected = std::exp(-psi.alpha * psi.alpha * 900.0);
  CHECK(f0 <= 1e-12);
  CHECK(std::abs(f0 - expected) < 1e-12);
}

TEST_CASE("revival peak of the small tangent chain") {
  // L_eff = 100, Delta = 8, N_A = 30: peak fidelity ~0.977 near 1.007 tau.
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const SpectralData s = diagonalize(build_hamiltonian(c));
  const WavePacket psi = gaussian_packet(c, 30, 8.0);
  const double tau = c.revival_time();
  const PeakResult peak = find_max_fidelity(s, psi, 0.5 * tau, 1.5 * tau);
  CHECK(peak.f_star == doctest::Approx(0.977).epsilon(0.01));
  CHECK(peak.t_star / tau == doctest::Approx(1.007).epsilon(0.005));
}

TEST_CASE("after one revival time the packet sits near the mirror site") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const SpectralData s = diagonalize(build_hamiltonian(c));
  const WavePacket psi = gaussian_packet(c, 30, 8.0);
  const WavePacket at_tau = evolve_spectral(s, psi, c.revival_time());
  int peak_site = 0;
  double peak = 0.0;
  for (int a = 0; a < at_tau.size(); ++a) {
    if (std::abs(at_tau.amplitudes[a]) > peak) {
      peak = std::abs(at_tau.amplitudes[a]);
      peak_site = a - at_tau.half_length();
    }
  }
  CHECK(std::abs(peak_site - (-30)) <= 4);
}

TEST_CASE("fidelity is symmetric under mirrored starting sites") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const SpectralData s = diagonalize(build_hamiltonian(c));
  const WavePacket right = gaussian_packet(c, 30, 8.0);
  const WavePacket left = gaussian_packet(c, -30, 8.0);
  for (const double t : {100.0, 1000.0, 2500.0}) {
    const double fr = fidelity(right, evolve_spectral(s, right, t));
    const double fl = fidelity(left, evolve_spectral(s, left, t));
    CHECK(std::abs(fr - fl) < 1e-10);
  }
}

TEST_CASE("series invariants and grid validation") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const Hamiltonian h = build_hamiltonian(c);
  const SpectralData s = diagonalize(h);
  const WavePacket psi = gaussian_packet(c, 30, 8.0);

  const FidelitySeries series =
      fidelity_series(c, s, h, psi, {0.0, 500.0, 1000.0, 2000.0, 3200.0});
  CHECK(series.samples.size() == 5);
  for (const auto& sample : series.samples) {
    CHECK(sample.f >= 0.0);
    CHECK(sample.f <= 1.0 + 1e-12);
  }
  CHECK(series.fingerprint == c.fingerprint());
  CHECK(series.max_norm_drift <= 1e-10);
  CHECK(series.max_energy_drift <= 1e-9);

  CHECK_THROWS_AS(fidelity_series(c, s, h, psi, {0.0, 1.0, 1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(fidelity_series(c, s, h, psi, {}), std::invalid_argument);
}

TEST_CASE("refining the grid leaves shared samples bit-identical") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const Hamiltonian h = build_hamiltonian(c);
  const SpectralData s = diagonalize(h);
  const WavePacket psi = gaussian_packet(c, 30, 8.0);

  const FidelitySeries coarse = fidelity_series(c, s, h, psi, {0.0, 1000.0, 2000.0});
  const FidelitySeries fine =
      fidelity_series(c, s, h, psi, {0.0, 500.0, 1000.0, 1500.0, 2000.0});
  CHECK(coarse.samples[0].f == fine.samples[0].f);
  CHECK(coarse.samples[1].f == fine.samples[2].f);
  CHECK(coarse.samples[2].f == fine.samples[4].f);
}

TEST_CASE("single-point grid at t = 0 with a centred packet") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const WavePacket psi = gaussian_packet(c, 0, 8.0);
  const FidelitySeries series = fidelity_series(c, psi, {0.0});
  CHECK(series.samples.size() == 1);
  CHECK(series.samples[0].t == 0.0);
  CHECK(series.samples[0].f == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("peak search on a stationary state returns the constant value") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const SpectralData s = diagonalize(build_hamiltonian(c));
  WavePacket ground;
  ground.amplitudes = s.eigenvectors.col(0).cast<std::complex<double>>();
  ground.center = 0;
  ground.alpha = 1.0;
  const PeakResult peak = find_max_fidelity(s, ground, 0.0, 100.0);
  CHECK(peak.f_star == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(peak.t_star >= 0.0);
  CHECK(peak.t_star <= 100.0);
}

TEST_CASE("peak search argument validation") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 100.0);
  const SpectralData s = diagonalize(build_hamiltonian(c));
  const WavePacket psi = gaussian_packet(c, 30, 8.0);
  CHECK_THROWS_AS(find_max_fidelity(s, psi, 5.0, 5.0), std::invalid_argument);
  CHECK_THROWS_AS(find_max_fidelity(s, psi, 0.0, 10.0, 1), std::invalid_argument);
}
