#pragma once

#include <variant>
#include <vector>

#include "sdist/grid.hpp"

namespace sdist {

// Analytic shapes with closed-form distance to their boundary.
// All shapes are closed sets; "inside" means inside the closure.

struct Interval {
  double center = 0.0;
  double half_width = 0.0;
};

struct Ball {
  Point center{0.0, 0.0};
  double radius = 0.0;
};

struct Annulus {
  Point center{0.0, 0.0};
  double r_inner = 0.0;
  double r_outer = 0.0;
};

struct BoxShape {
  Point lo{0.0, 0.0};
  Point hi{0.0, 0.0};
  int dim = 2;
};

struct Shape;

struct ShapeUnion {
  std::vector<Shape> members;
};

struct Shape {
  std::variant<Interval, Ball, Annulus, BoxShape, ShapeUnion> v;

  Shape(Interval s) : v(s) {}
  Shape(Ball s) : v(s) {}
  Shape(Annulus s) : v(s) {}
  Shape(BoxShape s) : v(s) {}
  Shape(ShapeUnion s) : v(std::move(s)) {}

  int dim() const;
};

// Throws ConfigError on nonpositive radii/widths, degenerate boxes, or
// union members that touch (gap checked by sampled minimum distance).
void validate_shape(const Shape& s);

double exact_distance(const Shape& s, const Point& x);
double exact_signed_distance(const Shape& s, const Point& x);
bool inside_closure(const Shape& s, const Point& x);

// Smallest geometric feature the grid has to resolve (half-width, radius,
// annulus ring thickness, ...).
double min_feature_size(const Shape& s);

// Radius of the largest exterior tangent ball guaranteed by the shape itself
// (infinite for convex shapes). Recorded for diagnostics; never used numerically.
double exterior_ball_radius(const Shape& s);

// Uniform parametric samples of the shape boundary; deterministic.
std::vector<Point> boundary_points(const Shape& s, int count);

// Design region: a box containing the shape of interest strictly inside.
struct DesignDomain {
  BoxShape omega;
  Shape region;  // the set whose boundary the construction targets

  DesignDomain(BoxShape box, Shape a);
  double gap() const { return gap_; }

 private:
  double gap_ = 0.0;
};

// Distance from an interior point to the box boundary (0 on the boundary).
double box_boundary_distance(const BoxShape& box, const Point& x);

// All nodes within one grid spacing of the shape boundary.
// Throws EmptyInterface when the spacing exceeds the smallest feature size.
NodeSet rasterize_interface(const Shape& s, const Grid& grid);

// Nodes of the closed region itself (signed distance <= 0).
Mask closure_mask(const Shape& s, const Grid& grid);

// Nodes where distance to the shape boundary does not exceed distance to
// the box boundary.
Mask omega_star_mask(const DesignDomain& domain, const Grid& grid);

// Exhaustive-minimum oracle over an interface node set.
ScalarField brute_force_distance_field(const NodeSet& interface,
                                       const Grid& grid);

ScalarField exact_distance_field(const Shape& s, const Grid& grid);
ScalarField exact_signed_distance_field(const Shape& s, const Grid& grid);

}  // namespace sdist
