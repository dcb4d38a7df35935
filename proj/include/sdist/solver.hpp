#pragma once

#include "sdist/grid.hpp"
#include "sdist/geometry.hpp"
#include "sdist/sources.hpp"

namespace sdist {

struct SolverConfig {
  double a = 1e-2;
  double tolerance = 1e-10;
  int max_iterations = 50000;

  void validate() const {
    if (!(a >= 1e-8 && a <= 1.0))
      throw ConfigError("diffusion a must lie in [1e-8, 1]");
    if (!(tolerance > 0.0 && tolerance <= 1e-4))
      throw ConfigError("solver tolerance must lie in (0, 1e-4]");
    if (max_iterations < 1) throw ConfigError("max iterations must be >= 1");
  }
};

// Finite-difference discretization of -a*Laplacian + I on the interior
// nodes (3-point stencil in 1D, 5-point in 2D), Dirichlet data folded into
// the right-hand side. Immutable once assembled.
struct DiscreteSystem {
  Grid grid;
  double a;
  double cx, cy;    // off-diagonal couplings a/hx^2, a/hy^2
  double diag;      // 1 + 2cx (+ 2cy)
  std::vector<double> rhs;       // interior nodes only
  std::vector<double> boundary;  // full-grid vector, boundary values of g

  std::int64_t interior_count() const;
  void apply(const double* u, double* out) const;
  // Gather/scatter between full-grid fields and interior vectors.
  std::vector<double> restrict_interior(const ScalarField& f) const;
  void embed_interior(const std::vector<double>& u, ScalarField& f) const;
};

// Refuses with GridTooCoarse when spacing > sqrt(a)/4 on any axis (the
// boundary layer of the solution has width sqrt(a)).
DiscreteSystem assemble(const DesignDomain& domain, const Grid& grid, double a,
                        const SourceSpec& f, const BoundarySpec& g);

struct SolveResult {
  ScalarField u;
  int iterations = 0;
  double residual = 0.0;
  double tolerance = 0.0;
  double min_u = 0.0;  // over interior nodes
  double max_u = 0.0;  // over all nodes
};

// 1D: direct tridiagonal elimination. 2D: diagonally preconditioned
// conjugate gradients with a deterministic blocked reduction.
SolveResult solve(const DiscreteSystem& system, const SolverConfig& config);

double residual_norm(const DiscreteSystem& system, const ScalarField& u);

struct BoundReport {
  double min_u;
  double max_u;
  double bound;  // max(sup f, sup g)
  bool positive_ok;
  bool upper_ok;
  bool pass() const { return positive_ok && upper_ok; }
};

BoundReport verify_bounds(const SolveResult& result, const SourceSpec& f,
                          const BoundarySpec& g);

}  // namespace sdist
