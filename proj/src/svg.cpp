#include "spinchain/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "spinchain/errors.hpp"

namespace spinchain {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
constexpr int kPaletteSize = 6;
constexpr int kMarginLeft = 72;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 52;

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// 1-2-5 tick spacing covering [lo, hi] with about `target` intervals.
std::vector<double> nice_ticks(double lo, double hi, int target) {
  const double span = hi - lo;
  if (!(span > 0.0)) return {lo};
  const double raw = span / target;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (const double mult : {1.0, 2.0, 5.0, 10.0}) {
    if (mult * mag >= raw) {
      step = mult * mag;
      break;
    }
  }
  std::vector<double> ticks;
  const double first = std::ceil(lo / step) * step;
  for (double t = first; t <= hi + 0.5 * step; t += step) {
    // snap values that should be exact zero
    ticks.push_back(std::abs(t) < 1e-12 * step ? 0.0 : t);
  }
  return ticks;
}

std::string escape(const std::string& text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const SvgFigure& figure) {
  bool any_points = false;
  for (const auto& s : figure.series) any_points |= !s.points.empty();
  if (figure.series.empty() || !any_points) {
    throw std::invalid_argument("cannot render an empty figure");
  }

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = x_min;
  double y_max = -x_min;
  for (const auto& s : figure.series) {
    for (const auto& p : s.points) {
      x_min = std::min(x_min, p[0]);
      x_max = std::max(x_max, p[0]);
      y_min = std::min(y_min, p[1]);
      y_max = std::max(y_max, p[1]);
    }
  }
  if (x_max == x_min) x_max = x_min + 1.0;
  if (y_max == y_min) y_max = y_min + 1.0;

  const double plot_w = figure.width - kMarginLeft - kMarginRight;
  const double plot_h = figure.height - kMarginTop - kMarginBottom;
  const double sx = plot_w / (x_max - x_min);
  const double sy = plot_h / (y_max - y_min);
  const auto px = [&](double x) { return kMarginLeft + (x - x_min) * sx; };
  const auto py = [&](double y) { return kMarginTop + (y_max - y) * sy; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << figure.width
      << "\" height=\"" << figure.height << "\" viewBox=\"0 0 " << figure.width << " "
      << figure.height << "\">\n"
      << "<!-- transform: x_px = " << kMarginLeft << " + (x - " << num(x_min) << ") * "
      << num(sx) << "; y_px = " << kMarginTop << " + (" << num(y_max) << " - y) * "
      << num(sy) << " -->\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // grid + ticks
  out << "<g stroke=\"#dddddd\" stroke-width=\"1\">\n";
  const auto xticks = nice_ticks(x_min, x_max, 6);
  const auto yticks = nice_ticks(y_min, y_max, 6);
  for (const double t : xticks) {
    out << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(py(y_min)) << "\" x2=\""
        << num(px(t)) << "\" y2=\"" << num(py(y_max)) << "\"/>\n";
  }
  for (const double t : yticks) {
    out << "<line x1=\"" << num(px(x_min)) << "\" y1=\"" << num(py(t)) << "\" x2=\""
        << num(px(x_max)) << "\" y2=\"" << num(py(t)) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333333\">\n";
  for (const double t : xticks) {
    out << "<text x=\"" << num(px(t)) << "\" y=\"" << num(py(y_min) + 18)
        << "\" text-anchor=\"middle\">" << tick_label(t) << "</text>\n";
  }
  for (const double t : yticks) {
    out << "<text x=\"" << num(px(x_min) - 6) << "\" y=\"" << num(py(t) + 4)
        << "\" text-anchor=\"end\">" << tick_label(t) << "</text>\n";
  }
  out << "</g>\n";

  // axes frame
  out << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\""
      << num(plot_w) << "\" height=\"" << num(plot_h)
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

  // labels + title
  out << "<text x=\"" << num(kMarginLeft + plot_w / 2) << "\" y=\"" << figure.height - 12
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
      << escape(figure.x_label) << "</text>\n";
  out << "<text x=\"18\" y=\"" << num(kMarginTop + plot_h / 2)
      << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 18 " << num(kMarginTop + plot_h / 2) << ")\">"
      << escape(figure.y_label) << "</text>\n";
  out << "<text x=\"" << num(kMarginLeft + plot_w / 2)
      << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" "
      << "text-anchor=\"middle\">" << escape(figure.title) << "</text>\n";

  // series
  for (std::size_t k = 0; k < figure.series.size(); ++k) {
    const auto& s = figure.series[k];
    if (s.points.empty()) continue;
    out << "<polyline fill=\"none\" stroke=\"" << kPalette[k % kPaletteSize]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t p = 0; p < s.points.size(); ++p) {
      if (p) out << ' ';
      out << num(px(s.points[p][0])) << ',' << num(py(s.points[p][1]));
    }
    out << "\"/>\n";
  }

  // legend
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  const double lx = kMarginLeft + plot_w - 150;
  double ly = kMarginTop + 14;
  for (std::size_t k = 0; k < figure.series.size(); ++k) {
    out << "<line x1=\"" << num(lx) << "\" y1=\"" << num(ly - 4) << "\" x2=\""
        << num(lx + 26) << "\" y2=\"" << num(ly - 4) << "\" stroke=\""
        << kPalette[k % kPaletteSize] << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(lx + 32) << "\" y=\"" << num(ly) << "\" class=\"legend\">"
        << escape(figure.series[k].name) << "</text>\n";
    ly += 18;
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

void write_svg(const SvgFigure& figure, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open for writing", path.string());
  file << render_svg(figure);
  if (!file) throw IoError("write failed", path.string());
}

}  // namespace spinchain
