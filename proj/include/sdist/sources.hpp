#pragma once

#include <functional>
#include <optional>
#include <span>
#include <variant>

#include "sdist/geometry.hpp"

namespace sdist {

// Source terms vanishing exactly on a closed region, nonnegative elsewhere.

// f = amplitude on the complement of the region, 0 on it.
struct IndicatorComplement {
  Shape shape;
  double amplitude = 1.0;
};

// f = max(|x|^2 - r^2, 0)^zeta around a ball.
struct PowerLawBall {
  Ball ball;
  double zeta = 1.0;
};

// 1D: f = 0 for |x| < k, (|x| - k)^zeta otherwise.
struct PowerLaw1D {
  double k = 0.5;
  double zeta = 0.0;
};

struct CustomSource {
  std::function<double(Point)> fn;
  Shape zero_set;
  std::optional<double> declared_zeta;
};

struct SourceSpec {
  std::variant<IndicatorComplement, PowerLawBall, PowerLaw1D, CustomSource> v;

  SourceSpec(IndicatorComplement s) : v(std::move(s)) {}
  SourceSpec(PowerLawBall s) : v(s) {}
  SourceSpec(PowerLaw1D s) : v(s) {}
  SourceSpec(CustomSource s) : v(std::move(s)) {}
};

void validate_source(const SourceSpec& f);

double evaluate_source(const SourceSpec& f, const Point& x);

// The closed region on which f vanishes identically.
Shape zero_set(const SourceSpec& f);

// Supremum of f over the box (analytic per variant; nodal sample for
// custom sources).
double sup_source(const SourceSpec& f, const BoxShape& box);

// Boundary data: nonnegative and continuous on the box boundary.
struct BoundaryConstant {
  double value = 0.0;
};
struct BoundaryCallable {
  std::function<double(Point)> fn;
};
struct BoundarySpec {
  std::variant<BoundaryConstant, BoundaryCallable> v;

  BoundarySpec(BoundaryConstant b) : v(b) {}
  BoundarySpec(BoundaryCallable b) : v(std::move(b)) {}
};

double evaluate_boundary(const BoundarySpec& g, const Point& x);
double sup_boundary(const BoundarySpec& g, const BoxShape& box);

// Scan of eps^{-zeta*p} * volume_mean(f^p) over boundary samples and radii.
struct MeanScan {
  double inf;
  double sup;
};

MeanScan mean_condition_scan(const SourceSpec& f, const Shape& shape,
                             double zeta, int p, const Grid& grid,
                             std::span<const double> eps_list,
                             int boundary_samples = 64);

// Log-log slope of the volume mean of f versus the ball radius, averaged
// over boundary samples. Needs >= 4 radii spanning at least a decade.
double estimate_zeta(const SourceSpec& f, const Shape& shape, const Grid& grid,
                     std::span<const double> eps_list,
                     int boundary_samples = 64);

// Samples f at every grid node.
ScalarField sample_source(const SourceSpec& f, const Grid& grid, int power = 1);

}  // namespace sdist
