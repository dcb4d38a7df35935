#include "sdist/sources.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sdist/fields.hpp"

namespace sdist {

namespace {

double power_law(double t, double zeta) {
  if (t <= 0.0) return 0.0;
  return zeta == 0.0 ? 1.0 : std::pow(t, zeta);
}

}  // namespace

void validate_source(const SourceSpec& f) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IndicatorComplement>) {
          validate_shape(s.shape);
          if (!(s.amplitude > 0.0))
            throw ConfigError("indicator amplitude must be positive");
        } else if constexpr (std::is_same_v<T, PowerLawBall>) {
          validate_shape(Shape{s.ball});
          if (!(s.zeta >= 0.0) || !std::isfinite(s.zeta))
            throw ConfigError("power-law exponent must be finite and >= 0");
        } else if constexpr (std::is_same_v<T, PowerLaw1D>) {
          if (!(s.k > 0.0)) throw ConfigError("power-law break must be positive");
          if (!(s.zeta >= 0.0) || !std::isfinite(s.zeta))
            throw ConfigError("power-law exponent must be finite and >= 0");
        } else if constexpr (std::is_same_v<T, CustomSource>) {
          if (!s.fn) throw ConfigError("custom source needs a callable");
          validate_shape(s.zero_set);
        }
      },
      f.v);
}

double evaluate_source(const SourceSpec& f, const Point& x) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IndicatorComplement>)
          return inside_closure(s.shape, x) ? 0.0 : s.amplitude;
        else if constexpr (std::is_same_v<T, PowerLawBall>) {
          const double dx = x[0] - s.ball.center[0];
          const double dy = x[1] - s.ball.center[1];
          return power_law(dx * dx + dy * dy - s.ball.radius * s.ball.radius,
                           s.zeta);
        } else if constexpr (std::is_same_v<T, PowerLaw1D>)
          return power_law(std::abs(x[0]) - s.k, s.zeta);
        else
          return s.fn(x);
      },
      f.v);
}

Shape zero_set(const SourceSpec& f) {
  return std::visit(
      [](const auto& s) -> Shape {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IndicatorComplement>)
          return s.shape;
        else if constexpr (std::is_same_v<T, PowerLawBall>)
          return Shape{s.ball};
        else if constexpr (std::is_same_v<T, PowerLaw1D>)
          return Shape{Interval{0.0, s.k}};
        else
          return s.zero_set;
      },
      f.v);
}

double sup_source(const SourceSpec& f, const BoxShape& box) {
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, IndicatorComplement>)
          return s.amplitude;
        else if constexpr (std::is_same_v<T, PowerLawBall>) {
          // Farthest box corner from the ball center.
          double d2 = 0.0;
          for (int ax = 0; ax < box.dim; ++ax) {
            const double d = std::max(std::abs(box.lo[ax] - s.ball.center[ax]),
                                      std::abs(box.hi[ax] - s.ball.center[ax]));
            d2 += d * d;
          }
          return power_law(d2 - s.ball.radius * s.ball.radius, s.zeta);
        } else if constexpr (std::is_same_v<T, PowerLaw1D>) {
          const double m = std::max(std::abs(box.lo[0]), std::abs(box.hi[0]));
          return power_law(m - s.k, s.zeta);
        } else {
          // Coarse deterministic sample; custom sources carry no closed form.
          double sup = 0.0;
          const int n = 64;
          for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= (box.dim == 2 ? n : 0); ++j) {
              Point p{box.lo[0] + (box.hi[0] - box.lo[0]) * i / n, 0.0};
              if (box.dim == 2)
                p[1] = box.lo[1] + (box.hi[1] - box.lo[1]) * j / n;
              sup = std::max(sup, evaluate_source(f, p));
            }
          return sup;
        }
      },
      f.v);
}

double evaluate_boundary(const BoundarySpec& g, const Point& x) {
  return std::visit(
      [&](const auto& b) -> double {
        using T = std::decay_t<decltype(b)>;
        if constexpr (std::is_same_v<T, BoundaryConstant>)
          return b.value;
        else
          return b.fn(x);
      },
      g.v);
}

double sup_boundary(const BoundarySpec& g, const BoxShape& box) {
  if (const auto* c = std::get_if<BoundaryConstant>(&g.v)) return c->value;
  double sup = 0.0;
  for (const Point& p : boundary_points(Shape{box}, 512))
    sup = std::max(sup, evaluate_boundary(g, p));
  return sup;
}

ScalarField sample_source(const SourceSpec& f, const Grid& grid, int power) {
  ScalarField out(grid);
  for (std::int64_t idx = 0; idx < grid.num_nodes(); ++idx) {
    const double v = evaluate_source(f, grid.point(idx));
    if (v < 0.0) throw ConfigError("source must be nonnegative");
    out[idx] = power == 1 ? v : v * v;
  }
  return out;
}

MeanScan mean_condition_scan(const SourceSpec& f, const Shape& shape,
                             double zeta, int p, const Grid& grid,
                             std::span<const double> eps_list,
                             int boundary_samples) {
  if (p != 1 && p != 2) throw ConfigError("mean condition supports p in {1,2}");
  if (eps_list.empty()) throw ConfigError("mean condition needs radii");
  const ScalarField fp = sample_source(f, grid, p);
  const auto samples = boundary_points(shape, boundary_samples);
  MeanScan scan{std::numeric_limits<double>::infinity(), 0.0};
  for (double eps : eps_list) {
    const double w = std::pow(eps, -zeta * p);
    for (const Point& y : samples) {
      const double v = w * volume_mean(fp, y, eps);
      scan.inf = std::min(scan.inf, v);
      scan.sup = std::max(scan.sup, v);
    }
  }
  return scan;
}

double estimate_zeta(const SourceSpec& f, const Shape& shape, const Grid& grid,
                     std::span<const double> eps_list, int boundary_samples) {
  if (eps_list.size() < 4)
    throw ConfigError("zeta estimate needs at least 4 radii");
  const auto [mn, mx] =
      std::minmax_element(eps_list.begin(), eps_list.end());
  if (*mx < 9.99 * *mn)
    throw ConfigError("zeta estimate radii must span a decade");
  const ScalarField ff = sample_source(f, grid, 1);
  const auto samples = boundary_points(shape, boundary_samples);
  double slope_sum = 0.0;
  for (const Point& y : samples) {
    // Least squares of log(mean) on log(eps).
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(eps_list.size());
    for (double eps : eps_list) {
      const double lx = std::log(eps);
      const double ly = std::log(volume_mean(ff, y, eps));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    slope_sum += (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  return slope_sum / static_cast<double>(samples.size());
}

}  // namespace sdist
