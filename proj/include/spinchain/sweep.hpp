#pragma once

#include <string>
#include <vector>

#include "spinchain/config.hpp"
#include "spinchain/csv.hpp"

namespace spinchain {

// How the peak-search window for one grid point is chosen.
enum class PeakWindow {
  // [0.5 tau, 1.5 tau] with tau = 2 pi / B0 recomputed from the point's
  // config; the quadratic-regime revival window.
  Revival,
  // [0, 2 T] with T = 2 pi / (mean of the 10 lowest level spacings); brackets
  // the first recurrence when no revival-time formula applies (strong field).
  Recurrence,
};

struct SweepPoint {
  ChainConfig config;
  double delta = 0.0;          // packet half-width
  int distance = 0;            // L = 2 N_A; packet starts at +L/2
  std::vector<double> params;  // values echoed into the output row
};

struct SweepSpec {
  std::vector<std::string> param_names;  // column names for params
  std::vector<SweepPoint> points;
  PeakWindow window = PeakWindow::Revival;
  int coarse_samples = 2000;
};

struct SweepRow {
  std::vector<double> params;
  double t_star = 0.0;
  double f_star = 0.0;
  bool ok = false;
  std::string diagnostics;  // failure reason or truncation note
};

struct SweepTable {
  std::vector<std::string> param_names;
  std::vector<SweepRow> rows;  // input order, independent of worker count
  std::string fingerprint;
};

// Runs find_max_fidelity per grid point. Rows may execute on `workers`
// threads; results land at their input index, so the table is identical for
// any worker count. A failing point records its diagnostics and never aborts
// the sweep.
SweepTable sweep(const SweepSpec& spec, int workers = 1);

CsvTable sweep_to_csv(const SweepTable& table);

}  // namespace spinchain
