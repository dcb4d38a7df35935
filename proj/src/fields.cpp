#include "sdist/fields.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace sdist {

namespace {

int clamp_cell(double t, int cells) {
  int j = static_cast<int>(std::floor(t));
  return std::clamp(j, 0, cells - 1);
}

void check_ball_inside(const Grid& g, const Point& c, double r,
                       bool sphere_only) {
  for (int ax = 0; ax < g.dim(); ++ax) {
    if (c[ax] - r < g.lo(ax) || c[ax] + r > g.hi(ax)) {
      if (sphere_only) throw SphereOutsideGrid("sphere exceeds grid extents");
      throw BallOutsideGrid("ball exceeds grid extents");
    }
  }
}

}  // namespace

double interpolate(const ScalarField& f, const Point& x) {
  const Grid& g = f.grid;
  if (g.dim() == 1) {
    const double t = (x[0] - g.lo(0)) / g.spacing(0);
    const int j = clamp_cell(t, g.nodes(0) - 1);
    const double w = t - j;
    return f[g.index(j)] * (1.0 - w) + f[g.index(j + 1)] * w;
  }
  const double tx = (x[0] - g.lo(0)) / g.spacing(0);
  const double ty = (x[1] - g.lo(1)) / g.spacing(1);
  const int i = clamp_cell(tx, g.nodes(0) - 1);
  const int j = clamp_cell(ty, g.nodes(1) - 1);
  const double wx = tx - i;
  const double wy = ty - j;
  return f[g.index(i, j)] * (1 - wx) * (1 - wy) +
         f[g.index(i + 1, j)] * wx * (1 - wy) +
         f[g.index(i, j + 1)] * (1 - wx) * wy +
         f[g.index(i + 1, j + 1)] * wx * wy;
}

double volume_mean(const ScalarField& f, const Point& center, double radius) {
  const Grid& g = f.grid;
  check_ball_inside(g, center, radius, false);
  if (radius < 2.0 * g.max_spacing())
    throw BallUnresolved("ball radius below two grid spacings");

  // Restrict the scan to the bounding box of the ball.
  std::array<int, 2> ilo{0, 0}, ihi{0, 0};
  for (int ax = 0; ax < g.dim(); ++ax) {
    ilo[ax] = std::max(
        0, static_cast<int>(std::ceil((center[ax] - radius - g.lo(ax)) / g.spacing(ax))));
    ihi[ax] = std::min(
        g.nodes(ax) - 1,
        static_cast<int>(std::floor((center[ax] + radius - g.lo(ax)) / g.spacing(ax))));
  }

  double sum = 0.0;
  std::int64_t count = 0;
  const double r2 = radius * radius;
  if (g.dim() == 1) {
    for (int i = ilo[0]; i <= ihi[0]; ++i) {
      const double dx = g.lo(0) + i * g.spacing(0) - center[0];
      if (dx * dx <= r2) {
        sum += f[g.index(i)];
        ++count;
      }
    }
  } else {
    for (int i = ilo[0]; i <= ihi[0]; ++i) {
      const double dx = g.lo(0) + i * g.spacing(0) - center[0];
      for (int j = ilo[1]; j <= ihi[1]; ++j) {
        const double dy = g.lo(1) + j * g.spacing(1) - center[1];
        if (dx * dx + dy * dy <= r2) {
          sum += f[g.index(i, j)];
          ++count;
        }
      }
    }
  }
  const std::int64_t min_count = g.dim() == 1 ? 3 : 9;
  if (count < min_count) throw BallUnresolved("fewer than 3^N nodes in ball");
  return sum / static_cast<double>(count);
}

double surface_mean(const ScalarField& f, const Point& center, double radius) {
  const Grid& g = f.grid;
  check_ball_inside(g, center, radius, true);
  if (g.dim() == 1) {
    return 0.5 * (interpolate(f, {center[0] + radius, 0.0}) +
                  interpolate(f, {center[0] - radius, 0.0}));
  }
  const int m = std::max<int>(
      16, static_cast<int>(std::ceil(2.0 * std::numbers::pi * radius /
                                     g.max_spacing())));
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double th = 2.0 * std::numbers::pi * i / m;
    sum += interpolate(f, {center[0] + radius * std::cos(th),
                           center[1] + radius * std::sin(th)});
  }
  return sum / m;
}

double verify_mean_relation(const ScalarField& f, const Point& center,
                            double radius, int panels) {
  panels = std::max(panels, 64);
  const double vmean = volume_mean(f, center, radius);
  const int n = 2 * panels;
  const double dr = radius / n;
  const int N = f.grid.dim();
  // Composite Simpson of r^{N-1} S_r over (0, radius]; the r = 0 endpoint
  // contributes S_0 * 0^{N-1} which is 0 for N = 2 and S_0 = f(center) for
  // N = 1.
  auto integrand = [&](double r) {
    const double s = r == 0.0 ? interpolate(f, center) : surface_mean(f, center, r);
    return (N == 1 ? 1.0 : r) * s;
  };
  double sum = integrand(0.0) + integrand(radius);
  for (int i = 1; i < n; ++i)
    sum += (i % 2 == 1 ? 4.0 : 2.0) * integrand(i * dr);
  const double integral = sum * dr / 3.0;
  const double smean_side =
      static_cast<double>(N) / std::pow(radius, N) * integral;
  return std::abs(vmean - smean_side);
}

}  // namespace sdist
