#include "spinchain/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <thread>

#include "spinchain/analytic.hpp"
#include "spinchain/csv.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/fidelity.hpp"
#include "spinchain/packet.hpp"
#include "spinchain/scenario.hpp"
#include "spinchain/spectral.hpp"
#include "spinchain/svg.hpp"
#include "spinchain/sweep.hpp"
#include "spinchain/version.hpp"

namespace spinchain {

namespace {

namespace fs = std::filesystem;

// Raw flag values shared by every subcommand; resolved into a ChainConfig
// after parsing. Units: energies in J, times in 1/J, lengths in sites.
struct ConfigFlags {
  double j = 1.0;
  std::optional<double> lambda;
  std::optional<double> b0;
  double l_eff = 500.0;
  std::optional<int> n_half;
  std::string potential = "tangent";

  void attach(CLI::App* cmd) {
    cmd->add_option("--j", j, "Exchange coupling J, the unit of energy (default 1)");
    cmd->add_option("--lambda", lambda,
                    "Dimensionless field strength; b0 is derived as 2*lambda*J*pi^2/L_eff^2");
    cmd->add_option("--b0", b0, "Field amplitude B0 in units of J; lambda is derived");
    cmd->add_option("--l-eff", l_eff, "Effective length L_eff in sites (default 500)");
    cmd->add_option("--n-half", n_half,
                    "Chain half-length N, sites run -N..N (default ceil(L_eff/2)-1)");
    cmd->add_option("--potential", potential, "Field shape: tangent|parabolic|zero")
        ->check(CLI::IsMember({"tangent", "parabolic", "zero"}));
  }

  ChainConfig resolve() const {
    const PotentialKind kind = potential_from_string(potential);
    if (lambda && b0) {
      ChainConfig c;
      c.j_coupling = j;
      c.lambda = *lambda;
      c.b0 = *b0;
      c.l_eff = l_eff;
      c.n_half = n_half.value_or(default_half_length(l_eff));
      c.potential = kind;
      c.validate();
      return c;
    }
    if (b0) return ChainConfig::with_b0(*b0, l_eff, j, n_half, kind);
    return ChainConfig::with_lambda(lambda.value_or(1.0), l_eff, j, n_half, kind);
  }
};

void echo_config(std::ostream& out, const ChainConfig& c,
                 const std::vector<std::pair<std::string, std::string>>& extras) {
  out << "# resolved configuration\n";
  out << "j = " << format_full(c.j_coupling) << "\n";
  out << "lambda = " << format_full(c.lambda) << "\n";
  out << "b0 = " << format_full(c.b0) << "\n";
  out << "l-eff = " << format_full(c.l_eff) << "\n";
  out << "n-half = " << c.n_half << "\n";
  out << "potential = " << to_string(c.potential) << "\n";
  for (const auto& [key, value] : extras) out << key << " = " << value << "\n";
  out << "\n";
}

std::vector<std::pair<std::string, std::string>> csv_comments(const ChainConfig& c) {
  return {
      {"generator", std::string("spinchain ") + kVersion},
      {"fingerprint", c.fingerprint()},
      {"j", format_full(c.j_coupling)},
      {"lambda", format_full(c.lambda)},
      {"b0", format_full(c.b0)},
      {"l_eff", format_full(c.l_eff)},
      {"n_half", format_full(c.n_half)},
      {"potential", to_string(c.potential)},
  };
}

fs::path ensure_dir(const fs::path& base, const char* leaf) {
  const fs::path dir = base / leaf;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory", dir.string());
  return dir;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

// Flat `key = value` config file, `#` comments; keys mirror flag names.
// Values become `--key value` tokens for flags the command line leaves unset,
// so explicit flags always override the file.
std::vector<std::string> merge_config_file(const std::vector<std::string>& args) {
  std::string path;
  std::vector<std::string> merged;
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw ConfigError("--config needs a file path");
      path = args[++k];
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
    } else {
      merged.push_back(args[k]);
    }
  }
  if (path.empty()) return merged;

  std::ifstream file(path);
  if (!file) throw ConfigError("cannot read config file: " + path);
  std::vector<std::string> extra;
  std::string line;
  while (std::getline(file, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line is not `key = value`: " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("config line is not `key = value`: " + line);
    }
    const std::string flag = "--" + key;
    const bool already_set =
        std::any_of(merged.begin(), merged.end(), [&](const std::string& a) {
          return a == flag || a.rfind(flag + "=", 0) == 0;
        });
    if (!already_set) {
      extra.push_back(flag);
      extra.push_back(value);
    }
  }
  // config tokens go right after the subcommand name
  if (!merged.empty()) {
    merged.insert(merged.begin() + 1, extra.begin(), extra.end());
  }
  return merged;
}

int cmd_spectrum(std::ostream& out, const ConfigFlags& flags, const std::string& out_dir,
                 int n_max_flag, const std::string& model_name, double extent_tol) {
  const ChainConfig config = flags.resolve();
  echo_config(out, config, {});

  const SpectralData s = diagonalize(build_hamiltonian(config));
  const int n_max = n_max_flag > 0 ? n_max_flag : std::min(150, s.size() - 1);
  const SpectrumModel model =
      model_name == "linear" ? SpectrumModel::Linear : SpectrumModel::Quadratic;
  const SpmcReport report = spmc_check(s, n_max, model, extent_tol);

  const fs::path dir = ensure_dir(out_dir, "spectrum");
  CsvTable levels;
  levels.comments = csv_comments(config);
  levels.columns = {"n", "energy", "parity", "parity_confidence"};
  for (int n = 0; n < s.size(); ++n) {
    levels.rows.push_back({static_cast<double>(n), s.energies[n],
                           static_cast<double>(s.parities[n]), s.parity_confidence[n]});
  }
  write_csv(levels, dir / "levels.csv");

  CsvTable spacings;
  spacings.comments = csv_comments(config);
  spacings.columns = {"n", "spacing"};
  const std::vector<double> d = level_spacings(s);
  for (std::size_t n = 0; n < d.size(); ++n) {
    spacings.rows.push_back({static_cast<double>(n + 1), d[n]});
  }
  write_csv(spacings, dir / "spacings.csv");

  CsvTable spmc;
  spmc.comments = csv_comments(config);
  spmc.comments.emplace_back("model", model_name);
  spmc.columns = {"n_max", "c2",
                  "c1",    "c0",
                  "max_relative_residual", "parity_alternation_ok",
                  "quadratic_extent"};
  spmc.rows.push_back({static_cast<double>(n_max), report.c2, report.c1, report.c0,
                       report.max_relative_residual,
                       report.parity_alternation_ok ? 1.0 : 0.0,
                       static_cast<double>(report.quadratic_extent)});
  write_csv(spmc, dir / "spmc.csv");

  out << "levels = " << s.size() << "\n";
  out << "ground energy [J] = " << format_full(s.energies[0]) << "\n";
  out << "fit window n_max = " << n_max << " (" << model_name << ")\n";
  out << "fit c2 [J] = " << format_full(report.c2) << "\n";
  out << "fit c1 [J] = " << format_full(report.c1) << "\n";
  out << "max relative residual = " << format_full(report.max_relative_residual) << "\n";
  out << "parity alternation ok = " << (report.parity_alternation_ok ? "yes" : "no")
      << "\n";
  out << "quadratic extent = " << report.quadratic_extent << "\n";
  out << "wrote " << (dir / "levels.csv").string() << ", spacings.csv, spmc.csv\n";
  return 0;
}

int cmd_evolve(std::ostream& out, const ConfigFlags& flags, const std::string& out_dir,
               double delta, int center, double t, const std::string& propagator) {
  const ChainConfig config = flags.resolve();
  echo_config(out, config,
              {{"delta", format_full(delta)},
               {"center", std::to_string(center)},
               {"t", format_full(t)}});

  const Hamiltonian h = build_hamiltonian(config);
  const WavePacket psi0 = gaussian_packet(config, center, delta);
  const WavePacket psi = propagator == "chebyshev"
                             ? evolve_chebyshev(h, psi0, t)
                             : evolve_spectral(diagonalize(h), psi0, t);

  const fs::path dir = ensure_dir(out_dir, "evolve");
  CsvTable csv;
  csv.comments = csv_comments(config);
  csv.comments.emplace_back("delta", format_full(delta));
  csv.comments.emplace_back("center", std::to_string(center));
  csv.comments.emplace_back("t", format_full(t));
  csv.comments.emplace_back("propagator", propagator);
  if (psi0.truncation_warning) {
    csv.comments.emplace_back(
        "warning", "packet tail clipped (weight " + format_full(psi0.clipped_weight) + ")");
  }
  csv.columns = {"site", "re", "im", "prob"};
  for (int a = 0; a < psi.size(); ++a) {
    const auto amp = psi.amplitudes[a];
    csv.rows.push_back({static_cast<double>(a - psi.half_length()), amp.real(),
                        amp.imag(), std::norm(amp)});
  }
  write_csv(csv, dir / "state.csv");
  out << "norm = " << format_full(psi.norm()) << "\n";
  out << "wrote " << (dir / "state.csv").string() << "\n";
  return 0;
}

int cmd_fidelity(std::ostream& out, const ConfigFlags& flags, const std::string& out_dir,
                 double delta, int center, double t_max_flag, int samples) {
  const ChainConfig config = flags.resolve();
  const double t_max = t_max_flag > 0 ? t_max_flag : 3.0 * config.revival_time();
  echo_config(out, config,
              {{"delta", format_full(delta)},
               {"center", std::to_string(center)},
               {"t-max", format_full(t_max)},
               {"samples", std::to_string(samples)}});

  Scenario scenario = Scenario::custom(
      config, delta, center, [&] {
        std::vector<double> grid(samples + 1);
        for (int k = 0; k <= samples; ++k) grid[k] = t_max * k / samples;
        return grid;
      }());
  const auto written = run_scenario(scenario, out_dir);
  for (const auto& path : written) out << "wrote " << path.string() << "\n";
  return 0;
}

int cmd_sweep(std::ostream& out, const ConfigFlags& flags, const std::string& out_dir,
              double delta, int center, const std::string& param, double from, double to,
              double step, int workers, const std::string& window_name) {
  const ChainConfig base = flags.resolve();
  echo_config(out, base,
              {{"delta", format_full(delta)},
               {"center", std::to_string(center)},
               {"param", param},
               {"from", format_full(from)},
               {"to", format_full(to)},
               {"step", format_full(step)},
               {"workers", std::to_string(workers)}});
  if (!(step > 0.0) || !(to >= from)) {
    throw ConfigError("sweep needs step > 0 and to >= from");
  }

  SweepSpec spec;
  spec.window =
      window_name == "recurrence" ? PeakWindow::Recurrence : PeakWindow::Revival;
  spec.param_names = {param, "delta"};
  const int steps = static_cast<int>(std::floor((to - from) / step + 1e-9));
  for (int k = 0; k <= steps; ++k) {
    const double value = from + k * step;
    SweepPoint p;
    if (param == "lambda") {
      p.config = ChainConfig::with_lambda(value, base.l_eff, base.j_coupling,
                                          std::nullopt, base.potential);
    } else {
      p.config = ChainConfig::with_lambda(base.lambda, value, base.j_coupling,
                                          std::nullopt, base.potential);
    }
    p.delta = delta;
    p.distance = 2 * center;
    p.params = {value, delta};
    spec.points.push_back(std::move(p));
  }

  const SweepTable table = sweep(spec, workers);
  const fs::path dir = ensure_dir(out_dir, "sweep");
  CsvTable csv = sweep_to_csv(table);
  auto comments = csv_comments(base);
  csv.comments.insert(csv.comments.begin(), comments.begin(), comments.end());
  write_csv(csv, dir / "max_fidelity.csv");
  out << "wrote " << (dir / "max_fidelity.csv").string() << "\n";
  for (const auto& row : table.rows) {
    if (!row.ok) {
      out << "row " << format_full(row.params[0]) << " failed: " << row.diagnostics
          << "\n";
    }
  }
  return 0;
}

int cmd_reproduce(std::ostream& out, const std::string& which, const std::string& out_dir,
                  int workers) {
  std::vector<ScenarioId> ids;
  if (which == "all") {
    ids = {ScenarioId::Fig2Spacings,          ScenarioId::Fig3FidelityVsTime,
           ScenarioId::Fig4MaxFidelityVsLeff, ScenarioId::Fig5FidelityVsLambda,
           ScenarioId::Fig6StrongFieldSpectrum, ScenarioId::Fig7StrongFieldWidths,
           ScenarioId::Fig8StrongFieldDistances};
  } else {
    const std::map<std::string, ScenarioId> names = {
        {"fig2", ScenarioId::Fig2Spacings},
        {"fig3", ScenarioId::Fig3FidelityVsTime},
        {"fig4", ScenarioId::Fig4MaxFidelityVsLeff},
        {"fig5", ScenarioId::Fig5FidelityVsLambda},
        {"fig6", ScenarioId::Fig6StrongFieldSpectrum},
        {"fig7", ScenarioId::Fig7StrongFieldWidths},
        {"fig8", ScenarioId::Fig8StrongFieldDistances},
    };
    const auto it = names.find(which);
    if (it == names.end()) {
      throw ConfigError("unknown figure '" + which + "' (expected fig2..fig8 or all)");
    }
    ids = {it->second};
  }
  for (const ScenarioId id : ids) {
    const Scenario scenario = Scenario::figure(id);
    echo_config(out, scenario.base, {{"scenario", scenario_dir_name(id)}});
    const auto written = run_scenario(scenario, out_dir, workers);
    for (const auto& path : written) out << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{std::string("spinchain ") + kVersion +
               " - single-excitation transfer in a tangent-confined chain.\n"
               "Units: energies in J, times in 1/J, lengths in sites."};
  app.require_subcommand(1);

  std::string out_dir = "results";
  std::string config_doc;  // documentation only; handled before parsing
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Diagonalize and report the spectrum");
  ConfigFlags spectrum_flags;
  spectrum_flags.attach(spectrum);
  spectrum->add_option("--config", config_doc, "Read unset flags from a flat key = value file (# comments)");
  spectrum->add_option("--out", out_dir, "Output directory (default ./results)");
  int n_max = 0;
  std::string model = "quadratic";
  double extent_tol = 1e-2;
  spectrum->add_option("--n-max", n_max, "Fit window (default min(150, levels-1))");
  spectrum->add_option("--model", model, "Dispersion fit model: quadratic|linear")
      ->check(CLI::IsMember({"quadratic", "linear"}));
  spectrum->add_option("--extent-tol", extent_tol,
                       "Relative RMS tolerance for the spacing-law window (default 1e-2)");

  // evolve
  auto* evolve = app.add_subcommand("evolve", "Evolve a packet to one time point");
  ConfigFlags evolve_flags;
  evolve_flags.attach(evolve);
  evolve->add_option("--config", config_doc, "Read unset flags from a flat key = value file (# comments)");
  evolve->add_option("--out", out_dir, "Output directory (default ./results)");
  double delta = 24.0;
  int center = 200;
  double t_point = 0.0;
  std::string propagator = "spectral";
  evolve->add_option("--delta", delta, "Packet half-width Delta in sites (default 24)");
  evolve->add_option("--center", center, "Packet centre N_A in sites (default 200)");
  evolve->add_option("--t", t_point, "Evolution time in 1/J")->required();
  evolve->add_option("--propagator", propagator, "spectral|chebyshev")
      ->check(CLI::IsMember({"spectral", "chebyshev"}));

  // fidelity
  auto* fid = app.add_subcommand("fidelity", "Mirror-transfer fidelity time series");
  ConfigFlags fid_flags;
  fid_flags.attach(fid);
  fid->add_option("--config", config_doc, "Read unset flags from a flat key = value file (# comments)");
  fid->add_option("--out", out_dir, "Output directory (default ./results)");
  double fid_delta = 24.0;
  int fid_center = 200;
  double t_max = 0.0;
  int samples = 2000;
  fid->add_option("--delta", fid_delta, "Packet half-width Delta in sites (default 24)");
  fid->add_option("--center", fid_center, "Packet centre N_A in sites (default 200)");
  fid->add_option("--t-max", t_max, "End of the time grid in 1/J (default 3*tau)");
  fid->add_option("--samples", samples, "Number of grid steps (default 2000)");

  // sweep
  auto* swp = app.add_subcommand("sweep", "Maximal fidelity over a parameter grid");
  ConfigFlags swp_flags;
  swp_flags.attach(swp);
  swp->add_option("--config", config_doc, "Read unset flags from a flat key = value file (# comments)");
  swp->add_option("--out", out_dir, "Output directory (default ./results)");
  double swp_delta = 24.0;
  int swp_center = 200;
  std::string param = "lambda";
  double from = 0.5, to = 1.5, step = 0.05;
  std::string window_name = "revival";
  swp->add_option("--delta", swp_delta, "Packet half-width Delta in sites");
  swp->add_option("--center", swp_center, "Packet centre N_A in sites");
  swp->add_option("--param", param, "Swept parameter: lambda|l-eff")
      ->check(CLI::IsMember({"lambda", "l-eff"}));
  swp->add_option("--from", from, "Grid start");
  swp->add_option("--to", to, "Grid end (inclusive)");
  swp->add_option("--step", step, "Grid step");
  swp->add_option("--workers", workers, "Worker threads (default: hardware)");
  swp->add_option("--window", window_name,
                  "Peak window rule: revival ([0.5,1.5]*tau) | recurrence ([0, 2*T])")
      ->check(CLI::IsMember({"revival", "recurrence"}));

  // reproduce
  auto* rep = app.add_subcommand("reproduce", "Re-run a bundled figure scenario");
  std::string figure;
  rep->add_option("figure", figure, "fig2..fig8 or all")->required();
  rep->add_option("--out", out_dir, "Output directory (default ./results)");
  rep->add_option("--workers", workers, "Worker threads (default: hardware)");

  std::vector<std::string> merged;
  try {
    merged = merge_config_file(args);
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::vector<const char*> ptrs;
  ptrs.push_back("spinchain");
  for (const auto& a : merged) ptrs.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(ptrs.size()), ptrs.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (args.empty()) err << app.help();
    return 2;
  }

  try {
    if (spectrum->parsed()) {
      return cmd_spectrum(out, spectrum_flags, out_dir, n_max, model, extent_tol);
    }
    if (evolve->parsed()) {
      return cmd_evolve(out, evolve_flags, out_dir, delta, center, t_point, propagator);
    }
    if (fid->parsed()) {
      return cmd_fidelity(out, fid_flags, out_dir, fid_delta, fid_center, t_max, samples);
    }
    if (swp->parsed()) {
      return cmd_sweep(out, swp_flags, out_dir, swp_delta, swp_center, param, from, to,
                       step, workers, window_name);
    }
    if (rep->parsed()) {
      return cmd_reproduce(out, figure, out_dir, workers);
    }
  } catch (const ConfigError& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace spinchain
