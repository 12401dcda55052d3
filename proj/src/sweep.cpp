#include "spinchain/sweep.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <thread>

#include "spinchain/fidelity.hpp"
#include "spinchain/packet.hpp"
#include "spinchain/spectral.hpp"

namespace spinchain {

namespace {

SweepRow run_point(const SweepPoint& point, PeakWindow window, int coarse_samples) {
  SweepRow row;
  row.params = point.params;
  try {
    point.config.validate();
    const Hamiltonian h = build_hamiltonian(point.config);
    const SpectralData s = diagonalize(h);
    const WavePacket psi =
        gaussian_packet(point.config, point.distance / 2, point.delta);

    double t_lo = 0.0;
    double t_hi = 0.0;
    if (window == PeakWindow::Revival) {
      const double tau = point.config.revival_time();
      t_lo = 0.5 * tau;
      t_hi = 1.5 * tau;
    } else {
      const std::vector<double> d = level_spacings(s);
      double mean = 0.0;
      const int count = std::min<int>(10, static_cast<int>(d.size()));
      for (int n = 0; n < count; ++n) mean += d[n];
      mean /= count;
      t_hi = 2.0 * (2.0 * std::numbers::pi / mean);
    }
    const PeakResult peak = find_max_fidelity(s, psi, t_lo, t_hi, coarse_samples);
    row.t_star = peak.t_star;
    row.f_star = peak.f_star;
    row.ok = true;
    if (psi.truncation_warning) {
      row.diagnostics = "packet tail clipped (weight " + format_full(psi.clipped_weight) + ")";
    }
  } catch (const std::exception& e) {
    row.ok = false;
    row.t_star = std::nan("");
    row.f_star = std::nan("");
    row.diagnostics = e.what();
  }
  return row;
}

}  // namespace

SweepTable sweep(const SweepSpec& spec, int workers) {
  SweepTable table;
  table.param_names = spec.param_names;
  table.rows.resize(spec.points.size());
  if (!spec.points.empty()) {
    table.fingerprint = spec.points.front().config.fingerprint();
  }

  const int n_workers = std::max(
      1, std::min<int>(workers, static_cast<int>(spec.points.size())));
  if (n_workers == 1) {
    for (std::size_t k = 0; k < spec.points.size(); ++k) {
      table.rows[k] = run_point(spec.points[k], spec.window, spec.coarse_samples);
    }
    return table;
  }

  // Each point is independent and deterministic; results land at their input
  // index, so the assembled table does not depend on scheduling.
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (int w = 0; w < n_workers; ++w) {
    pool.emplace_back([&] {
      while (true) {
        const std::size_t k = next.fetch_add(1);
        if (k >= spec.points.size()) break;
        table.rows[k] = run_point(spec.points[k], spec.window, spec.coarse_samples);
      }
    });
  }
  for (auto& t : pool) t.join();
  return table;
}

CsvTable sweep_to_csv(const SweepTable& table) {
  CsvTable csv;
  csv.comments.emplace_back("fingerprint", table.fingerprint);
  csv.columns = table.param_names;
  csv.columns.push_back("t_star");
  csv.columns.push_back("f_star");
  csv.columns.push_back("ok");
  for (const auto& row : table.rows) {
    std::vector<double> cells = row.params;
    cells.push_back(row.t_star);
    cells.push_back(row.f_star);
    cells.push_back(row.ok ? 1.0 : 0.0);
    csv.rows.push_back(std::move(cells));
  }
  return csv;
}

}  // namespace spinchain
