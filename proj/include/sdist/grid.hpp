#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sdist/errors.hpp"

namespace sdist {

// A point in ambient space. The second coordinate is ignored in 1D.
using Point = std::array<double, 2>;

// Uniform tensor-product lattice on a box, dimension 1 or 2.
// Nodes include the box boundary; spacing is uniform per axis.
class Grid {
 public:
  Grid(int dim, std::array<int, 2> nodes, std::array<double, 2> lo,
       std::array<double, 2> hi);

  static Grid make_1d(int nodes, double lo, double hi);
  static Grid make_2d(int nx, int ny, Point lo, Point hi);

  int dim() const { return dim_; }
  int nodes(int axis) const { return nodes_[axis]; }
  std::int64_t num_nodes() const;
  double lo(int axis) const { return lo_[axis]; }
  double hi(int axis) const { return hi_[axis]; }
  double spacing(int axis) const { return spacing_[axis]; }
  double max_spacing() const;

  // Flattened index; in 2D the second axis varies fastest.
  std::int64_t index(int i, int j = 0) const;
  std::array<int, 2> multi_index(std::int64_t idx) const;
  Point point(std::int64_t idx) const;
  bool is_boundary(std::int64_t idx) const;
  bool contains(const Point& p) const;

  bool operator==(const Grid& other) const;

 private:
  int dim_;
  std::array<int, 2> nodes_;
  std::array<double, 2> lo_, hi_, spacing_;
};

// Smallest power-of-two cell count whose spacing does not exceed `target`.
int cells_for_spacing(double extent, double target);

struct ScalarField {
  Grid grid;
  std::vector<double> values;

  explicit ScalarField(const Grid& g, double fill = 0.0)
      : grid(g), values(static_cast<std::size_t>(g.num_nodes()), fill) {}

  double& operator[](std::int64_t i) { return values[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return values[static_cast<std::size_t>(i)]; }
  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
};

struct Mask {
  Grid grid;
  std::vector<std::uint8_t> on;

  explicit Mask(const Grid& g, bool fill = false)
      : grid(g), on(static_cast<std::size_t>(g.num_nodes()), fill ? 1 : 0) {}

  bool operator[](std::int64_t i) const { return on[static_cast<std::size_t>(i)] != 0; }
  void set(std::int64_t i, bool v) { on[static_cast<std::size_t>(i)] = v ? 1 : 0; }
  std::int64_t count() const;
};

// An explicit set of grid nodes (e.g. the rasterized interface band).
struct NodeSet {
  Grid grid;
  std::vector<std::int64_t> nodes;
};

// Writes "x[,y],value" rows, one per node.
void write_csv(const ScalarField& f, const std::string& path);

}  // namespace sdist
