#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinchain/csv.hpp"
#include "spinchain/errors.hpp"
#include "spinchain/scenario.hpp"
#include "spinchain/svg.hpp"
#include "spinchain/sweep.hpp"
#include "spinchain/fidelity.hpp"
#include "spinchain/packet.hpp"
#include "spinchain/spectral.hpp"

using namespace spinchain;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const char* tag) {
  const fs::path dir = fs::temp_directory_path() / (std::string("spinchain_test_") + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream file(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("empty table writes header plus comments only") {
  CsvTable table;
  table.comments = {{"j", "1"}, {"lambda", "1"}};
  table.columns = {"t", "F"};
  const std::string text = to_csv_string(table);
  CHECK(text == "# j = 1\n# lambda = 1\nt,F\n");
}

TEST_CASE("csv numeric round trip is exact") {
  const fs::path dir = temp_dir("csv");
  CsvTable table;
  table.comments = {{"fingerprint", "abc"}};
  table.columns = {"a", "b", "c"};
  table.rows = {
      {0.1, -1e-300, 7.895683520871486e-05},
      {1.0 / 3.0, 2.5551712090567493, -0.0},
      {1e308, 3.0, 4.0},
  };
  write_csv(table, dir / "t.csv");
  const CsvTable back = read_csv(dir / "t.csv");
  REQUIRE(back.rows.size() == table.rows.size());
  CHECK(back.columns == table.columns);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < table.rows[r].size(); ++c) {
      CHECK(back.rows[r][c] == table.rows[r][c]);
    }
  }
  CHECK(back.comments.front().first == "fingerprint");
}

TEST_CASE("csv write failures carry the path") {
  CsvTable table;
  table.columns = {"x"};
  CHECK_THROWS_AS(write_csv(table, "/nonexistent_dir_xyz/t.csv"), IoError);
}

TEST_CASE("svg: one polyline per series, legend entry per series") {
  SvgFigure fig;
  fig.title = "demo";
  fig.x_label = "x";
  fig.y_label = "y";
  fig.series.push_back({"first", {{0.0, 0.0}, {1.0, 2.0}}});
  const std::string one = render_svg(fig);
  CHECK(one.find("<polyline") != std::string::npos);
  CHECK(one.find("first") != std::string::npos);

  fig.series.push_back({"second", {{0.0, 1.0}, {1.0, 1.5}, {2.0, 0.5}}});
  const std::string two = render_svg(fig);
  std::size_t polylines = 0;
  for (std::size_t pos = two.find("<polyline"); pos != std::string::npos;
       pos = two.find("<polyline", pos + 1)) {
    ++polylines;
  }
  CHECK(polylines == 2);
  CHECK(two.find("second") != std::string::npos);
}

TEST_CASE("svg bytes are deterministic and data-faithful") {
  SvgFigure fig;
  fig.title = "determinism";
  fig.x_label = "x";
  fig.y_label = "y";
  fig.series.push_back({"s", {{0.0, 0.25}, {10.0, 0.75}}});
  const std::string a = render_svg(fig);
  const std::string b = render_svg(fig);
  CHECK(a == b);

  // first vertex maps through the documented affine transform:
  // x_px = 72 + (x - x_min) * sx, y_px = 40 + (y_max - y) * sy
  const double sx = (880.0 - 72.0 - 24.0) / 10.0;
  const double sy = (560.0 - 40.0 - 52.0) / 0.5;
  char expected[64];
  std::snprintf(expected, sizeof(expected), "%.8g,%.8g", 72 + 0.0 * sx,
                40 + (0.75 - 0.25) * sy);
  CHECK(a.find(expected) != std::string::npos);
}

TEST_CASE("svg rejects empty input") {
  SvgFigure fig;
  CHECK_THROWS_AS(render_svg(fig), std::invalid_argument);
  fig.series.push_back({"empty", {}});
  CHECK_THROWS_AS(render_svg(fig), std::invalid_argument);
}

TEST_CASE("custom scenario with a single t = 0 sample emits one row with F = 1") {
  const fs::path dir = temp_dir("custom");
  const ChainConfig c = ChainConfig::with_lambda(1.0, 40.0);
  const Scenario scenario = Scenario::custom(c, 6.0, 0, {0.0});
  const auto written = run_scenario(scenario, dir);
  REQUIRE(!written.empty());
  const CsvTable table = read_csv(dir / "custom" / "fidelity_series.csv");
  REQUIRE(table.rows.size() == 1);
  // columns: t,F,delta,L,L_eff,lambda
  CHECK(table.columns == std::vector<std::string>{"t", "F", "delta", "L", "L_eff",
                                                  "lambda"});
  CHECK(table.rows[0][0] == 0.0);
  CHECK(table.rows[0][1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fidelity series csv carries the pinned schema") {
  const fs::path dir = temp_dir("schema");
  const ChainConfig c = ChainConfig::with_lambda(1.0, 40.0);
  const Scenario scenario = Scenario::custom(c, 4.0, 5, {0.0, 10.0, 20.0});
  run_scenario(scenario, dir);
  const std::string text = slurp(dir / "custom" / "fidelity_series.csv");
  CHECK(text.find("t,F,delta,L,L_eff,lambda\n") != std::string::npos);
  CHECK(text.find("# b0 = ") != std::string::npos);
}

TEST_CASE("scenario validation") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 40.0);
  CHECK_THROWS_AS(run_scenario(Scenario::custom(c, 6.0, 0, {1.0, 1.0}), temp_dir("bad")),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_scenario(Scenario::custom(c, 6.0, 0, {}), temp_dir("bad2")),
                  std::invalid_argument);
}

TEST_CASE("single-point sweep reproduces a direct peak search") {
  const ChainConfig c = ChainConfig::with_lambda(1.0, 60.0);
  SweepSpec spec;
  spec.param_names = {"lambda", "delta"};
  SweepPoint point;
  point.config = c;
  point.delta = 6.0;
  point.distance = 30;
  point.params = {1.0, 6.0};
  spec.points = {point};
  const SweepTable table = sweep(spec, 1);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0].ok);

  const WavePacket psi = gaussian_packet(c, 15, 6.0);
  const double tau = c.revival_time();
  const PeakResult direct =
      find_max_fidelity(diagonalize(build_hamiltonian(c)), psi, 0.5 * tau, 1.5 * tau);
  CHECK(table.rows[0].t_star == direct.t_star);
  CHECK(table.rows[0].f_star == direct.f_star);
}

TEST_CASE("sweep tables are identical for 1 and k workers") {
  SweepSpec spec;
  spec.param_names = {"lambda", "delta"};
  for (const double lambda : {0.9, 1.0, 1.1, 1.2}) {
    SweepPoint p;
    p.config = ChainConfig::with_lambda(lambda, 60.0);
    p.delta = 6.0;
    p.distance = 30;
    p.params = {lambda, 6.0};
    spec.points.push_back(std::move(p));
  }
  const SweepTable serial = sweep(spec, 1);
  const SweepTable parallel = sweep(spec, 4);
  CHECK(to_csv_string(sweep_to_csv(serial)) == to_csv_string(sweep_to_csv(parallel)));
}

TEST_CASE("a failing sweep row records diagnostics and does not abort") {
  SweepSpec spec;
  spec.param_names = {"lambda", "delta"};
  SweepPoint good;
  good.config = ChainConfig::with_lambda(1.0, 60.0);
  good.delta = 6.0;
  good.distance = 30;
  good.params = {1.0, 6.0};
  SweepPoint bad = good;
  bad.distance = 200;  // centre far off the chain
  bad.params = {2.0, 6.0};
  spec.points = {good, bad, good};
  const SweepTable table = sweep(spec, 2);
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[0].ok);
  CHECK_FALSE(table.rows[1].ok);
  CHECK(!table.rows[1].diagnostics.empty());
  CHECK(table.rows[2].ok);
  CHECK(table.rows[0].f_star == table.rows[2].f_star);
}

TEST_CASE("figure scenarios declare their defaults") {
  const Scenario fig3 = Scenario::figure(ScenarioId::Fig3FidelityVsTime);
  CHECK(fig3.base.l_eff == 500.0);
  CHECK(fig3.base.lambda == 1.0);
  CHECK(fig3.widths == std::vector<double>{24.0, 18.0, 12.0, 6.0});
  CHECK(fig3.distances == std::vector<int>{400});

  const Scenario fig4 = Scenario::figure(ScenarioId::Fig4MaxFidelityVsLeff);
  CHECK(fig4.widths == std::vector<double>{28.0, 18.0});
  CHECK(fig4.l_eff_grid.size() == 11);
  CHECK(fig4.l_eff_grid.front() == 500.0);
  CHECK(fig4.l_eff_grid.back() == 1000.0);

  const Scenario fig5 = Scenario::figure(ScenarioId::Fig5FidelityVsLambda);
  CHECK(fig5.lambda_grid.size() == 21);
  CHECK(fig5.lambda_grid.front() == 0.5);
  CHECK(fig5.lambda_grid.back() == doctest::Approx(1.5).epsilon(1e-12));

  const Scenario fig6 = Scenario::figure(ScenarioId::Fig6StrongFieldSpectrum);
  CHECK(fig6.base.b0 == 6.33);

  const Scenario fig8 = Scenario::figure(ScenarioId::Fig8StrongFieldDistances);
  CHECK(fig8.distances == std::vector<int>{120, 200, 220});
  CHECK(fig8.widths == std::vector<double>{6.0});
}
