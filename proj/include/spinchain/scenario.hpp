#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "spinchain/config.hpp"

namespace spinchain {

enum class ScenarioId {
  Fig2Spacings,
  Fig3FidelityVsTime,
  Fig4MaxFidelityVsLeff,
  Fig5FidelityVsLambda,
  Fig6StrongFieldSpectrum,
  Fig7StrongFieldWidths,
  Fig8StrongFieldDistances,
  Custom,
};

const char* scenario_dir_name(ScenarioId id);

// A runnable experiment: a base configuration plus the per-figure parameter
// lists. The built-in figures fix
//   fig2: lambda=1, L_eff=500, spacing+spectrum with analytic overlay
//   fig3: Delta in {24,18,12,6}, L=400, L_eff=500, t in [0, 3 tau]
//   fig4: Delta in {28,18}, L_eff in [500,1000] step 50, L = L_eff - 100
//   fig5: Delta=24, L=400, L_eff=500, lambda in [0.5,1.5] step 0.05
//   fig6: B0=6.33, L_eff=500, spacing+spectrum with equal-spacing overlay
//   fig7: Delta in {6,4,2}, L=120, B0=6.33
//   fig8: Delta=6, L in {120,200,220}, B0=6.33
struct Scenario {
  ScenarioId id = ScenarioId::Custom;
  ChainConfig base;
  std::vector<double> widths;       // Delta values
  std::vector<int> distances;       // L = 2 N_A values
  std::vector<double> lambda_grid;  // fig5
  std::vector<double> l_eff_grid;   // fig4
  int time_samples = 3000;          // samples per emitted time series
  std::vector<double> time_grid;    // Custom only; overrides the default grid

  static Scenario figure(ScenarioId id);
  static Scenario custom(const ChainConfig& config, double delta, int center,
                         std::vector<double> time_grid);

  void validate() const;
};

// Runs the scenario and writes one CSV per data series plus one SVG per
// figure under out_dir/<scenario-dir>/. Returns the paths written, in a
// deterministic order. Repeated runs emit byte-identical files.
std::vector<std::filesystem::path> run_scenario(const Scenario& scenario,
                                                const std::filesystem::path& out_dir,
                                                int workers = 1);

}  // namespace spinchain
