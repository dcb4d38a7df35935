#include "sdist/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

namespace sdist {

Grid::Grid(int dim, std::array<int, 2> nodes, std::array<double, 2> lo,
           std::array<double, 2> hi)
    : dim_(dim), nodes_(nodes), lo_(lo), hi_(hi) {
  if (dim != 1 && dim != 2) throw ConfigError("grid dimension must be 1 or 2");
  for (int ax = 0; ax < dim_; ++ax) {
    if (nodes_[ax] < 3)
      throw ConfigError("grid needs at least 3 nodes per axis");
    if (!(lo_[ax] < hi_[ax]))
      throw ConfigError("grid extents must satisfy lo < hi");
    spacing_[ax] = (hi_[ax] - lo_[ax]) / (nodes_[ax] - 1);
  }
  if (dim_ == 1) {
    nodes_[1] = 1;
    lo_[1] = hi_[1] = 0.0;
    spacing_[1] = 0.0;
  }
}

Grid Grid::make_1d(int nodes, double lo, double hi) {
  return Grid(1, {nodes, 1}, {lo, 0.0}, {hi, 0.0});
}

Grid Grid::make_2d(int nx, int ny, Point lo, Point hi) {
  return Grid(2, {nx, ny}, {lo[0], lo[1]}, {hi[0], hi[1]});
}

std::int64_t Grid::num_nodes() const {
  return static_cast<std::int64_t>(nodes_[0]) * nodes_[1];
}

double Grid::max_spacing() const {
  double s = spacing_[0];
  if (dim_ == 2) s = std::max(s, spacing_[1]);
  return s;
}

std::int64_t Grid::index(int i, int j) const {
  return static_cast<std::int64_t>(i) * nodes_[1] + j;
}

std::array<int, 2> Grid::multi_index(std::int64_t idx) const {
  return {static_cast<int>(idx / nodes_[1]), static_cast<int>(idx % nodes_[1])};
}

Point Grid::point(std::int64_t idx) const {
  auto [i, j] = multi_index(idx);
  Point p{lo_[0] + i * spacing_[0], 0.0};
  if (dim_ == 2) p[1] = lo_[1] + j * spacing_[1];
  return p;
}

bool Grid::is_boundary(std::int64_t idx) const {
  auto [i, j] = multi_index(idx);
  if (i == 0 || i == nodes_[0] - 1) return true;
  if (dim_ == 2 && (j == 0 || j == nodes_[1] - 1)) return true;
  return false;
}

bool Grid::contains(const Point& p) const {
  for (int ax = 0; ax < dim_; ++ax)
    if (p[ax] < lo_[ax] || p[ax] > hi_[ax]) return false;
  return true;
}

bool Grid::operator==(const Grid& other) const {
  if (dim_ != other.dim_) return false;
  for (int ax = 0; ax < dim_; ++ax) {
    if (nodes_[ax] != other.nodes_[ax]) return false;
    if (lo_[ax] != other.lo_[ax] || hi_[ax] != other.hi_[ax]) return false;
  }
  return true;
}

int cells_for_spacing(double extent, double target) {
  if (!(target > 0.0) || !(extent > 0.0))
    throw ConfigError("spacing rule needs positive extent and target");
  int needed = static_cast<int>(std::ceil(extent / target));
  int cells = 2;
  while (cells < needed) cells *= 2;
  return cells;
}

std::int64_t Mask::count() const {
  std::int64_t c = 0;
  for (auto v : on) c += v;
  return c;
}

void write_csv(const ScalarField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << (f.grid.dim() == 1 ? "x,value\n" : "x,y,value\n");
  char buf[96];
  for (std::int64_t idx = 0; idx < f.size(); ++idx) {
    Point p = f.grid.point(idx);
    if (f.grid.dim() == 1)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p[0], f[idx]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", p[0], p[1], f[idx]);
    out << buf;
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sdist
