#include "sdist/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "sdist/kernels.hpp"

namespace sdist {

namespace {

double norm2(const Point& a, const Point& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  return std::sqrt(dx * dx + dy * dy);
}

struct SignedDistanceVisitor {
  Point x;

  double operator()(const Interval& s) const {
    return std::abs(x[0] - s.center) - s.half_width;
  }
  double operator()(const Ball& s) const { return norm2(x, s.center) - s.radius; }
  double operator()(const Annulus& s) const {
    const double r = norm2(x, s.center);
    // Inside the ring: negative of the distance to the nearer circle.
    return std::max(s.r_inner - r, r - s.r_outer);
  }
  double operator()(const BoxShape& s) const {
    double inside = -std::numeric_limits<double>::infinity();
    double out2 = 0.0;
    for (int ax = 0; ax < s.dim; ++ax) {
      const double q = std::max(s.lo[ax] - x[ax], x[ax] - s.hi[ax]);
      inside = std::max(inside, q);
      if (q > 0.0) out2 += q * q;
    }
    return inside <= 0.0 ? inside : std::sqrt(out2);
  }
  double operator()(const ShapeUnion& s) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& m : s.members)
      best = std::min(best, exact_signed_distance(m, x));
    return best;
  }
};

}  // namespace

int Shape::dim() const {
  return std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Interval>) return 1;
        if constexpr (std::is_same_v<T, Ball>) return 2;
        if constexpr (std::is_same_v<T, Annulus>) return 2;
        if constexpr (std::is_same_v<T, BoxShape>) return s.dim;
        if constexpr (std::is_same_v<T, ShapeUnion>)
          return s.members.empty() ? 0 : s.members.front().dim();
      },
      v);
}

double exact_signed_distance(const Shape& s, const Point& x) {
  return std::visit(SignedDistanceVisitor{x}, s.v);
}

double exact_distance(const Shape& s, const Point& x) {
  return std::abs(exact_signed_distance(s, x));
}

bool inside_closure(const Shape& s, const Point& x) {
  return exact_signed_distance(s, x) <= 0.0;
}

double min_feature_size(const Shape& s) {
  return std::visit(
      [](const auto& sh) -> double {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Interval>) return sh.half_width;
        if constexpr (std::is_same_v<T, Ball>) return sh.radius;
        if constexpr (std::is_same_v<T, Annulus>)
          return std::min(sh.r_inner, sh.r_outer - sh.r_inner);
        if constexpr (std::is_same_v<T, BoxShape>) {
          double f = std::numeric_limits<double>::infinity();
          for (int ax = 0; ax < sh.dim; ++ax)
            f = std::min(f, 0.5 * (sh.hi[ax] - sh.lo[ax]));
          return f;
        }
        if constexpr (std::is_same_v<T, ShapeUnion>) {
          double f = std::numeric_limits<double>::infinity();
          for (const auto& m : sh.members) f = std::min(f, min_feature_size(m));
          return f;
        }
      },
      s.v);
}

double exterior_ball_radius(const Shape& s) {
  return std::visit(
      [](const auto& sh) -> double {
        using T = std::decay_t<decltype(sh)>;
        const double inf = std::numeric_limits<double>::infinity();
        if constexpr (std::is_same_v<T, Annulus>)
          return sh.r_inner;  // limited by the hole
        else if constexpr (std::is_same_v<T, ShapeUnion>) {
          double r = inf;
          for (const auto& m : sh.members)
            r = std::min(r, exterior_ball_radius(m));
          return r;
        } else {
          (void)sh;
          return inf;  // convex pieces admit exterior balls of any radius
        }
      },
      s.v);
}

std::vector<Point> boundary_points(const Shape& s, int count) {
  std::vector<Point> pts;
  std::visit(
      [&](const auto& sh) {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Interval>) {
          pts.push_back({sh.center - sh.half_width, 0.0});
          pts.push_back({sh.center + sh.half_width, 0.0});
        } else if constexpr (std::is_same_v<T, Ball>) {
          const int m = std::max(count, 4);
          for (int i = 0; i < m; ++i) {
            const double th = 2.0 * std::numbers::pi * i / m;
            pts.push_back({sh.center[0] + sh.radius * std::cos(th),
                           sh.center[1] + sh.radius * std::sin(th)});
          }
        } else if constexpr (std::is_same_v<T, Annulus>) {
          const int m = std::max(count / 2, 4);
          for (double r : {sh.r_inner, sh.r_outer})
            for (int i = 0; i < m; ++i) {
              const double th = 2.0 * std::numbers::pi * i / m;
              pts.push_back({sh.center[0] + r * std::cos(th),
                             sh.center[1] + r * std::sin(th)});
            }
        } else if constexpr (std::is_same_v<T, BoxShape>) {
          if (sh.dim == 1) {
            pts.push_back({sh.lo[0], 0.0});
            pts.push_back({sh.hi[0], 0.0});
            return;
          }
          const double wx = sh.hi[0] - sh.lo[0];
          const double wy = sh.hi[1] - sh.lo[1];
          const double perim = 2.0 * (wx + wy);
          const int m = std::max(count, 8);
          for (int i = 0; i < m; ++i) {
            double t = perim * i / m;
            Point p;
            if (t < wx)
              p = {sh.lo[0] + t, sh.lo[1]};
            else if ((t -= wx) < wy)
              p = {sh.hi[0], sh.lo[1] + t};
            else if ((t -= wy) < wx)
              p = {sh.hi[0] - t, sh.hi[1]};
            else
              p = {sh.lo[0], sh.hi[1] - (t - wx)};
            pts.push_back(p);
          }
        } else if constexpr (std::is_same_v<T, ShapeUnion>) {
          const int per = std::max(count / static_cast<int>(sh.members.size()), 4);
          for (const auto& m : sh.members) {
            auto sub = boundary_points(m, per);
            pts.insert(pts.end(), sub.begin(), sub.end());
          }
        }
      },
      s.v);
  return pts;
}

void validate_shape(const Shape& s) {
  std::visit(
      [&](const auto& sh) {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Interval>) {
          if (!(sh.half_width > 0.0))
            throw ConfigError("interval half-width must be positive");
        } else if constexpr (std::is_same_v<T, Ball>) {
          if (!(sh.radius > 0.0))
            throw ConfigError("ball radius must be positive");
        } else if constexpr (std::is_same_v<T, Annulus>) {
          if (!(sh.r_inner > 0.0) || !(sh.r_outer > sh.r_inner))
            throw ConfigError("annulus needs 0 < r_inner < r_outer");
        } else if constexpr (std::is_same_v<T, BoxShape>) {
          if (sh.dim != 1 && sh.dim != 2)
            throw ConfigError("box shape dimension must be 1 or 2");
          for (int ax = 0; ax < sh.dim; ++ax)
            if (!(sh.lo[ax] < sh.hi[ax]))
              throw ConfigError("box shape needs lo < hi");
        } else if constexpr (std::is_same_v<T, ShapeUnion>) {
          if (sh.members.size() < 2)
            throw ConfigError("union needs at least two members");
          int d = sh.members.front().dim();
          for (const auto& m : sh.members) {
            validate_shape(m);
            if (m.dim() != d)
              throw ConfigError("union members must share a dimension");
          }
          // Sampled pairwise gap check.
          for (std::size_t i = 0; i < sh.members.size(); ++i)
            for (std::size_t j = i + 1; j < sh.members.size(); ++j) {
              double gap = std::numeric_limits<double>::infinity();
              for (const Point& p : boundary_points(sh.members[i], 256))
                gap = std::min(gap,
                               exact_signed_distance(sh.members[j], p));
              if (!(gap > 0.0))
                throw ConfigError("union members must be disjoint with a gap");
            }
        }
      },
      s.v);
}

DesignDomain::DesignDomain(BoxShape box, Shape a)
    : omega(box), region(std::move(a)) {
  validate_shape(Shape{box});
  validate_shape(region);
  if (region.dim() != box.dim)
    throw ConfigError("design domain and region dimensions differ");
  // Exact gap per variant: distance of the shape to the box walls.
  double g = std::numeric_limits<double>::infinity();
  auto wall_gap = [&](const Point& c, double r) {
    for (int ax = 0; ax < box.dim; ++ax) {
      g = std::min(g, c[ax] - r - box.lo[ax]);
      g = std::min(g, box.hi[ax] - r - c[ax]);
    }
  };
  std::visit(
      [&](const auto& sh) {
        using T = std::decay_t<decltype(sh)>;
        if constexpr (std::is_same_v<T, Interval>)
          wall_gap({sh.center, 0.0}, sh.half_width);
        else if constexpr (std::is_same_v<T, Ball>)
          wall_gap(sh.center, sh.radius);
        else if constexpr (std::is_same_v<T, Annulus>)
          wall_gap(sh.center, sh.r_outer);
        else if constexpr (std::is_same_v<T, BoxShape>) {
          for (int ax = 0; ax < box.dim; ++ax) {
            g = std::min(g, sh.lo[ax] - box.lo[ax]);
            g = std::min(g, box.hi[ax] - sh.hi[ax]);
          }
        } else if constexpr (std::is_same_v<T, ShapeUnion>) {
          for (const auto& m : sh.members) {
            DesignDomain sub(box, m);
            g = std::min(g, sub.gap());
          }
        }
      },
      region.v);
  gap_ = g;
  if (!(gap_ > 0.0))
    throw ConfigError("region must lie strictly inside the design box");
}

double box_boundary_distance(const BoxShape& box, const Point& x) {
  double d = std::numeric_limits<double>::infinity();
  for (int ax = 0; ax < box.dim; ++ax) {
    d = std::min(d, x[ax] - box.lo[ax]);
    d = std::min(d, box.hi[ax] - x[ax]);
  }
  return std::max(d, 0.0);
}

NodeSet rasterize_interface(const Shape& s, const Grid& grid) {
  const double h = grid.max_spacing();
  if (h > min_feature_size(s))
    throw EmptyInterface("grid spacing exceeds the smallest shape feature");
  NodeSet band{grid, {}};
  for (std::int64_t idx = 0; idx < grid.num_nodes(); ++idx)
    if (exact_distance(s, grid.point(idx)) <= h) band.nodes.push_back(idx);
  if (band.nodes.empty())
    throw EmptyInterface("no grid node within one spacing of the interface");
  return band;
}

Mask closure_mask(const Shape& s, const Grid& grid) {
  Mask m(grid);
  for (std::int64_t idx = 0; idx < grid.num_nodes(); ++idx)
    m.set(idx, exact_signed_distance(s, grid.point(idx)) <= 0.0);
  return m;
}

Mask omega_star_mask(const DesignDomain& domain, const Grid& grid) {
  Mask m(grid);
  for (std::int64_t idx = 0; idx < grid.num_nodes(); ++idx) {
    const Point p = grid.point(idx);
    m.set(idx, exact_distance(domain.region, p) <=
                   box_boundary_distance(domain.omega, p));
  }
  return m;
}

ScalarField brute_force_distance_field(const NodeSet& interface,
                                       const Grid& grid) {
  if (interface.nodes.empty())
    throw EmptyInterface("brute-force oracle needs a nonempty interface");
  std::vector<Point> pts;
  pts.reserve(interface.nodes.size());
  for (auto idx : interface.nodes) pts.push_back(interface.grid.point(idx));
  ScalarField out(grid);
  out.values = kernels::min_distance_field(grid, pts);
  return out;
}

ScalarField exact_distance_field(const Shape& s, const Grid& grid) {
  ScalarField out(grid);
  for (std::int64_t idx = 0; idx < grid.num_nodes(); ++idx)
    out[idx] = exact_distance(s, grid.point(idx));
  return out;
}

ScalarField exact_signed_distance_field(const Shape& s, const Grid& grid) {
  ScalarField out(grid);
  for (std::int64_t idx = 0; idx < grid.num_nodes(); ++idx)
    out[idx] = exact_signed_distance(s, grid.point(idx));
  return out;
}

}  // namespace sdist
