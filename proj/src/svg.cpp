#include "sdist/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace sdist {

namespace {

constexpr int kW = 820, kH = 600;
constexpr int kMarL = 70, kMarR = 30, kMarT = 40, kMarB = 50;

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (!(hi > lo)) {
      lo -= 1.0;
      hi += 1.0;
    }
    const double m = 0.05 * (hi - lo);
    lo -= m;
    hi += m;
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// Blue -> white -> red map on [-1, 1].
std::string diverging_color(double t) {
  t = std::clamp(t, -1.0, 1.0);
  int r, g, b;
  if (t < 0) {
    r = static_cast<int>(255 * (1.0 + t));
    g = static_cast<int>(255 * (1.0 + t));
    b = 255;
  } else {
    r = 255;
    g = static_cast<int>(255 * (1.0 - t));
    b = static_cast<int>(255 * (1.0 - t));
  }
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

}  // namespace

void emit_line_svg(const std::vector<Series>& series, const std::string& title,
                   const std::string& path) {
  Range rx, ry;
  for (const auto& s : series) {
    for (double v : s.x) rx.add(v);
    for (double v : s.y) ry.add(v);
  }
  rx.pad();
  ry.pad();
  auto px = [&](double v) {
    return kMarL + (v - rx.lo) / (rx.hi - rx.lo) * (kW - kMarL - kMarR);
  };
  auto py = [&](double v) {
    return kH - kMarB - (v - ry.lo) / (ry.hi - ry.lo) * (kH - kMarT - kMarB);
  };

  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW
      << "' height='" << kH << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<text x='" << kW / 2 << "' y='24' text-anchor='middle' "
      << "font-family='sans-serif' font-size='16'>" << title << "</text>\n";
  // Axes.
  out << "<line x1='" << kMarL << "' y1='" << kH - kMarB << "' x2='"
      << kW - kMarR << "' y2='" << kH - kMarB << "' stroke='black'/>\n";
  out << "<line x1='" << kMarL << "' y1='" << kMarT << "' x2='" << kMarL
      << "' y2='" << kH - kMarB << "' stroke='black'/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double xv = rx.lo + (rx.hi - rx.lo) * i / 5;
    const double yv = ry.lo + (ry.hi - ry.lo) * i / 5;
    out << "<text x='" << px(xv) << "' y='" << kH - kMarB + 18
        << "' text-anchor='middle' font-family='sans-serif' font-size='11'>"
        << fmt(xv) << "</text>\n";
    out << "<text x='" << kMarL - 8 << "' y='" << py(yv) + 4
        << "' text-anchor='end' font-family='sans-serif' font-size='11'>"
        << fmt(yv) << "</text>\n";
  }
  // Curves.
  for (const auto& s : series) {
    out << "<polyline fill='none' stroke='" << s.color
        << "' stroke-width='1.5' points='";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (!std::isfinite(s.y[i])) continue;
      char buf[48];
      std::snprintf(buf, sizeof buf, "%.2f,%.2f ", px(s.x[i]), py(s.y[i]));
      out << buf;
    }
    out << "'/>\n";
  }
  // Legend.
  int ly = kMarT + 10;
  for (const auto& s : series) {
    out << "<line x1='" << kW - kMarR - 150 << "' y1='" << ly << "' x2='"
        << kW - kMarR - 120 << "' y2='" << ly << "' stroke='" << s.color
        << "' stroke-width='2'/>\n";
    out << "<text x='" << kW - kMarR - 112 << "' y='" << ly + 4
        << "' font-family='sans-serif' font-size='12'>" << s.label
        << "</text>\n";
    ly += 18;
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed: " + path);
}

void emit_heatmap_svg(const ScalarField& field, bool zero_contour,
                      const std::string& title, const std::string& path) {
  const Grid& g = field.grid;
  if (g.dim() != 2) throw ConfigError("heatmap needs a 2D field");
  const int stride =
      std::max(1, (std::max(g.nodes(0), g.nodes(1)) + 255) / 256);
  const int nx = (g.nodes(0) - 1) / stride;
  const int ny = (g.nodes(1) - 1) / stride;

  double amax = 0.0;
  for (double v : field.values)
    if (std::isfinite(v)) amax = std::max(amax, std::abs(v));
  if (amax == 0.0) amax = 1.0;

  const int plot = 520;
  const double cw = static_cast<double>(plot) / nx;
  const double ch = static_cast<double>(plot) / ny;

  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << plot + 80
      << "' height='" << plot + 70 << "'>\n";
  out << "<rect width='100%' height='100%' fill='white'/>\n";
  out << "<text x='" << (plot + 80) / 2 << "' y='24' text-anchor='middle' "
      << "font-family='sans-serif' font-size='15'>" << title << "</text>\n";
  const int ox = 40, oy = 40;
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      const double v = field[g.index(i * stride, j * stride)];
      if (!std::isfinite(v)) continue;
      char buf[160];
      std::snprintf(buf, sizeof buf,
                    "<rect x='%.1f' y='%.1f' width='%.1f' height='%.1f' "
                    "fill='%s'/>\n",
                    ox + i * cw, oy + plot - (j + 1) * ch, cw + 0.5, ch + 0.5,
                    diverging_color(v / amax).c_str());
      out << buf;
    }
  }
  if (zero_contour) {
    // Marching squares: emit one segment per sign-crossing cell edge pair.
    auto xpix = [&](double t) { return ox + t * plot; };
    auto ypix = [&](double t) { return oy + plot - t * plot; };
    out << "<g stroke='black' stroke-width='1.2'>\n";
    for (int i = 0; i + stride < g.nodes(0); i += stride) {
      for (int j = 0; j + stride < g.nodes(1); j += stride) {
        const double v00 = field[g.index(i, j)];
        const double v10 = field[g.index(i + stride, j)];
        const double v01 = field[g.index(i, j + stride)];
        const double v11 = field[g.index(i + stride, j + stride)];
        if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) ||
            !std::isfinite(v11))
          continue;
        std::vector<std::pair<double, double>> cuts;
        auto edge = [&](double a, double b, double ax_, double ay_, double bx,
                        double by) {
          if ((a < 0) == (b < 0)) return;
          const double t = a / (a - b);
          cuts.emplace_back(ax_ + t * (bx - ax_), ay_ + t * (by - ay_));
        };
        const double x0 = static_cast<double>(i) / (g.nodes(0) - 1);
        const double x1 = static_cast<double>(i + stride) / (g.nodes(0) - 1);
        const double y0 = static_cast<double>(j) / (g.nodes(1) - 1);
        const double y1 = static_cast<double>(j + stride) / (g.nodes(1) - 1);
        edge(v00, v10, x0, y0, x1, y0);
        edge(v01, v11, x0, y1, x1, y1);
        edge(v00, v01, x0, y0, x0, y1);
        edge(v10, v11, x1, y0, x1, y1);
        if (cuts.size() >= 2) {
          char buf[128];
          std::snprintf(buf, sizeof buf,
                        "<line x1='%.1f' y1='%.1f' x2='%.1f' y2='%.1f'/>\n",
                        xpix(cuts[0].first), ypix(cuts[0].second),
                        xpix(cuts[1].first), ypix(cuts[1].second));
          out << buf;
        }
      }
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sdist
