#pragma once

#include <cstdint>
#include <vector>

#include "sdist/grid.hpp"

// Data-parallel inner loops, each with a serial reference twin kept for
// testing. The OpenMP variants must produce results independent of the
// thread count: reductions use fixed-size blocks combined in index order.
namespace sdist::kernels {

inline constexpr std::int64_t kDotBlock = 4096;

double dot(const double* x, const double* y, std::int64_t n);
double dot_serial(const double* x, const double* y, std::int64_t n);

// y += alpha * x
void axpy(double alpha, const double* x, double* y, std::int64_t n);
void axpy_serial(double alpha, const double* x, double* y, std::int64_t n);

// p = z + beta * p
void update_direction(const double* z, double beta, double* p, std::int64_t n);
void update_direction_serial(const double* z, double beta, double* p,
                             std::int64_t n);

// out = (diag - a*Laplacian) u on the interior lattice, homogeneous Dirichlet.
// cx, cy are the off-diagonal couplings a/hx^2 and a/hy^2.
void stencil_apply_1d(std::int64_t n, double diag, double cx, const double* u,
                      double* out);
void stencil_apply_2d(std::int64_t nxi, std::int64_t nyi, double diag,
                      double cx, double cy, const double* u, double* out);
void stencil_apply_2d_serial(std::int64_t nxi, std::int64_t nyi, double diag,
                             double cx, double cy, const double* u,
                             double* out);

// Exhaustive minimum Euclidean distance from every grid node to `points`.
std::vector<double> min_distance_field(const Grid& grid,
                                       const std::vector<Point>& points);
std::vector<double> min_distance_field_serial(const Grid& grid,
                                              const std::vector<Point>& points);

}  // namespace sdist::kernels
