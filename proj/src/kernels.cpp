#include "sdist/kernels.hpp"

#include <cmath>
#include <limits>

namespace sdist::kernels {

double dot(const double* x, const double* y, std::int64_t n) {
  const std::int64_t nblocks = (n + kDotBlock - 1) / kDotBlock;
  std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < nblocks; ++b) {
    const std::int64_t begin = b * kDotBlock;
    const std::int64_t end = std::min(n, begin + kDotBlock);
    double s = 0.0;
    for (std::int64_t i = begin; i < end; ++i) s += x[i] * y[i];
    partial[static_cast<std::size_t>(b)] = s;
  }
  // Block sums combined in index order: result does not depend on threads.
  double total = 0.0;
  for (double s : partial) total += s;
  return total;
}

double dot_serial(const double* x, const double* y, std::int64_t n) {
  double s = 0.0;
  for (std::int64_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy(double alpha, const double* x, double* y, std::int64_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void axpy_serial(double alpha, const double* x, double* y, std::int64_t n) {
  for (std::int64_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void update_direction(const double* z, double beta, double* p,
                      std::int64_t n) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
}

void update_direction_serial(const double* z, double beta, double* p,
                             std::int64_t n) {
  for (std::int64_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
}

void stencil_apply_1d(std::int64_t n, double diag, double cx, const double* u,
                      double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    double v = diag * u[i];
    if (i > 0) v -= cx * u[i - 1];
    if (i + 1 < n) v -= cx * u[i + 1];
    out[i] = v;
  }
}

void stencil_apply_2d(std::int64_t nxi, std::int64_t nyi, double diag,
                      double cx, double cy, const double* u, double* out) {
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < nxi; ++i) {
    const double* row = u + i * nyi;
    double* orow = out + i * nyi;
    for (std::int64_t j = 0; j < nyi; ++j) {
      double v = diag * row[j];
      if (j > 0) v -= cy * row[j - 1];
      if (j + 1 < nyi) v -= cy * row[j + 1];
      if (i > 0) v -= cx * u[(i - 1) * nyi + j];
      if (i + 1 < nxi) v -= cx * u[(i + 1) * nyi + j];
      orow[j] = v;
    }
  }
}

void stencil_apply_2d_serial(std::int64_t nxi, std::int64_t nyi, double diag,
                             double cx, double cy, const double* u,
                             double* out) {
  for (std::int64_t i = 0; i < nxi; ++i) {
    for (std::int64_t j = 0; j < nyi; ++j) {
      double v = diag * u[i * nyi + j];
      if (j > 0) v -= cy * u[i * nyi + j - 1];
      if (j + 1 < nyi) v -= cy * u[i * nyi + j + 1];
      if (i > 0) v -= cx * u[(i - 1) * nyi + j];
      if (i + 1 < nxi) v -= cx * u[(i + 1) * nyi + j];
      out[i * nyi + j] = v;
    }
  }
}

std::vector<double> min_distance_field(const Grid& grid,
                                       const std::vector<Point>& points) {
  const std::int64_t n = grid.num_nodes();
  std::vector<double> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static)
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const Point p = grid.point(idx);
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : points) {
      const double dx = p[0] - q[0];
      const double dy = p[1] - q[1];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) best = d2;
    }
    out[static_cast<std::size_t>(idx)] = std::sqrt(best);
  }
  return out;
}

std::vector<double> min_distance_field_serial(
    const Grid& grid, const std::vector<Point>& points) {
  const std::int64_t n = grid.num_nodes();
  std::vector<double> out(static_cast<std::size_t>(n));
  for (std::int64_t idx = 0; idx < n; ++idx) {
    const Point p = grid.point(idx);
    double best = std::numeric_limits<double>::infinity();
    for (const Point& q : points) {
      const double dx = p[0] - q[0];
      const double dy = p[1] - q[1];
      const double d2 = dx * dx + dy * dy;
      if (d2 < best) best = d2;
    }
    out[static_cast<std::size_t>(idx)] = std::sqrt(best);
  }
  return out;
}

}  // namespace sdist::kernels
