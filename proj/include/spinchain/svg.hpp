#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace spinchain {

struct SvgSeries {
  std::string name;
  std::vector<std::array<double, 2>> points;  // (x, y) in data units
};

struct SvgFigure {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<SvgSeries> series;
  int width = 880;
  int height = 560;
};

// Standalone SVG 1.1 line chart: axes, 1-2-5 ticks, legend, one polyline per
// series. Purely a view: every polyline vertex is a data point mapped through
// the affine transform documented in a comment at the top of the file
// (x_px = margin_left + (x - x_min) * x_scale, y_px = margin_top +
// (y_max - y) * y_scale). Deterministic bytes for identical input.
// Throws std::invalid_argument when no series has points.
std::string render_svg(const SvgFigure& figure);

void write_svg(const SvgFigure& figure, const std::filesystem::path& path);

}  // namespace spinchain
