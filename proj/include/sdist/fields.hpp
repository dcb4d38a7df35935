#pragma once

#include "sdist/grid.hpp"

namespace sdist {

// Piecewise-linear (1D) / bilinear (2D) interpolation at an arbitrary point.
double interpolate(const ScalarField& f, const Point& x);

// Node-counting average of the field over the ball B_radius(center).
// Throws BallOutsideGrid / BallUnresolved (radius < 2 spacings or fewer
// than 3^N nodes inside).
double volume_mean(const ScalarField& f, const Point& center, double radius);

// Uniform average over the sphere of given radius. In 1D this is the
// two-point average; in 2D the circle is sampled at
// max(16, ceil(2*pi*radius/spacing)) angles with bilinear interpolation.
double surface_mean(const ScalarField& f, const Point& center, double radius);

// | volume_mean - (N/eta^N) * int_0^eta r^{N-1} surface_mean(r) dr |,
// the radial integral by composite Simpson with `panels` panels (>= 64).
double verify_mean_relation(const ScalarField& f, const Point& center,
                            double radius, int panels = 512);

}  // namespace sdist
