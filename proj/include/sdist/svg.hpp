#pragma once

#include <string>
#include <vector>

#include "sdist/grid.hpp"

namespace sdist {

struct Series {
  std::string label;
  std::string color;  // SVG color
  std::vector<double> x;
  std::vector<double> y;
};

// Line plot with axes, ticks and a legend. Output is deterministic.
void emit_line_svg(const std::vector<Series>& series, const std::string& title,
                   const std::string& path);

// Heatmap of a 2D field with an optional zero-level contour (marching
// squares). NaN cells are left blank.
void emit_heatmap_svg(const ScalarField& field, bool zero_contour,
                      const std::string& title, const std::string& path);

}  // namespace sdist
