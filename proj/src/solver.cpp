#include "sdist/solver.hpp"

#include <cmath>

#include "sdist/kernels.hpp"

namespace sdist {

std::int64_t DiscreteSystem::interior_count() const {
  std::int64_t n = grid.nodes(0) - 2;
  if (grid.dim() == 2) n *= grid.nodes(1) - 2;
  return n;
}

void DiscreteSystem::apply(const double* u, double* out) const {
  if (grid.dim() == 1) {
    kernels::stencil_apply_1d(grid.nodes(0) - 2, diag, cx, u, out);
  } else {
    kernels::stencil_apply_2d(grid.nodes(0) - 2, grid.nodes(1) - 2, diag, cx,
                              cy, u, out);
  }
}

std::vector<double> DiscreteSystem::restrict_interior(
    const ScalarField& f) const {
  std::vector<double> out(static_cast<std::size_t>(interior_count()));
  const int ny = grid.dim() == 2 ? grid.nodes(1) : 1;
  std::size_t k = 0;
  for (int i = 1; i + 1 < grid.nodes(0); ++i) {
    if (grid.dim() == 1) {
      out[k++] = f[i];
    } else {
      for (int j = 1; j + 1 < ny; ++j) out[k++] = f[grid.index(i, j)];
    }
  }
  return out;
}

void DiscreteSystem::embed_interior(const std::vector<double>& u,
                                    ScalarField& f) const {
  const int ny = grid.dim() == 2 ? grid.nodes(1) : 1;
  std::size_t k = 0;
  for (int i = 1; i + 1 < grid.nodes(0); ++i) {
    if (grid.dim() == 1) {
      f[i] = u[k++];
    } else {
      for (int j = 1; j + 1 < ny; ++j) f[grid.index(i, j)] = u[k++];
    }
  }
}

DiscreteSystem assemble(const DesignDomain& domain, const Grid& grid, double a,
                        const SourceSpec& f, const BoundarySpec& g) {
  if (!(a >= 1e-8 && a <= 1.0))
    throw ConfigError("diffusion a must lie in [1e-8, 1]");
  for (int ax = 0; ax < grid.dim(); ++ax) {
    if (std::abs(grid.lo(ax) - domain.omega.lo[ax]) > 1e-12 ||
        std::abs(grid.hi(ax) - domain.omega.hi[ax]) > 1e-12)
      throw ConfigError("grid must cover the design box exactly");
    if (grid.spacing(ax) > std::sqrt(a) / 4.0)
      throw GridTooCoarse("spacing exceeds sqrt(a)/4; boundary layer unresolved");
  }

  DiscreteSystem sys{grid, a, 0.0, 0.0, 0.0, {}, {}};
  sys.cx = a / (grid.spacing(0) * grid.spacing(0));
  sys.cy = grid.dim() == 2 ? a / (grid.spacing(1) * grid.spacing(1)) : 0.0;
  sys.diag = 1.0 + 2.0 * sys.cx + (grid.dim() == 2 ? 2.0 * sys.cy : 0.0);

  sys.boundary.assign(static_cast<std::size_t>(grid.num_nodes()), 0.0);
  for (std::int64_t idx = 0; idx < grid.num_nodes(); ++idx) {
    if (!grid.is_boundary(idx)) continue;
    const double gv = evaluate_boundary(g, grid.point(idx));
    if (gv < 0.0) throw ConfigError("boundary data must be nonnegative");
    sys.boundary[static_cast<std::size_t>(idx)] = gv;
  }

  sys.rhs.resize(static_cast<std::size_t>(sys.interior_count()));
  const int ny = grid.dim() == 2 ? grid.nodes(1) : 1;
  std::size_t k = 0;
  for (int i = 1; i + 1 < grid.nodes(0); ++i) {
    for (int j = (grid.dim() == 2 ? 1 : 0);
         j <= (grid.dim() == 2 ? ny - 2 : 0); ++j) {
      const std::int64_t idx = grid.index(i, j);
      const double fv = evaluate_source(f, grid.point(idx));
      if (fv < 0.0) throw ConfigError("source must be nonnegative");
      double b = fv;
      // Dirichlet lift from boundary neighbors.
      if (i == 1) b += sys.cx * sys.boundary[grid.index(0, j)];
      if (i == grid.nodes(0) - 2)
        b += sys.cx * sys.boundary[grid.index(grid.nodes(0) - 1, j)];
      if (grid.dim() == 2) {
        if (j == 1) b += sys.cy * sys.boundary[grid.index(i, 0)];
        if (j == ny - 2) b += sys.cy * sys.boundary[grid.index(i, ny - 1)];
      }
      sys.rhs[k++] = b;
    }
  }
  return sys;
}

namespace {

std::vector<double> solve_tridiagonal(const DiscreteSystem& sys) {
  // Thomas elimination; the operator is strictly diagonally dominant.
  const std::int64_t n = sys.interior_count();
  std::vector<double> c(static_cast<std::size_t>(n), 0.0);
  std::vector<double> d(sys.rhs);
  double beta = sys.diag;
  c[0] = -sys.cx / beta;
  d[0] /= beta;
  for (std::int64_t i = 1; i < n; ++i) {
    beta = sys.diag + sys.cx * c[static_cast<std::size_t>(i - 1)];
    c[static_cast<std::size_t>(i)] = -sys.cx / beta;
    d[static_cast<std::size_t>(i)] =
        (d[static_cast<std::size_t>(i)] +
         sys.cx * d[static_cast<std::size_t>(i - 1)]) /
        beta;
  }
  for (std::int64_t i = n - 2; i >= 0; --i)
    d[static_cast<std::size_t>(i)] -=
        c[static_cast<std::size_t>(i)] * d[static_cast<std::size_t>(i + 1)];
  return d;
}

struct CgOutcome {
  std::vector<double> u;
  int iterations;
  double rel_residual;
};

// One PCG pass from the given iterate. The recursive residual can drift
// from the true one near the stopping point, so the caller recomputes the
// true residual and restarts if needed.
CgOutcome solve_cg(const DiscreteSystem& sys, const SolverConfig& cfg,
                   std::vector<double> x, double bnorm, int budget) {
  const std::int64_t n = sys.interior_count();
  std::vector<double> r(static_cast<std::size_t>(n));
  std::vector<double> z(static_cast<std::size_t>(n));
  std::vector<double> p(static_cast<std::size_t>(n));
  std::vector<double> ap(static_cast<std::size_t>(n));

  sys.apply(x.data(), r.data());
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] =
      sys.rhs[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(i)];

  const double inv_diag = 1.0 / sys.diag;
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] =
      r[static_cast<std::size_t>(i)] * inv_diag;
  p = z;
  double rz = kernels::dot(r.data(), z.data(), n);

  for (int it = 1; it <= budget; ++it) {
    sys.apply(p.data(), ap.data());
    const double pap = kernels::dot(p.data(), ap.data(), n);
    if (pap <= 0.0) break;
    const double alpha = rz / pap;
    kernels::axpy(alpha, p.data(), x.data(), n);
    kernels::axpy(-alpha, ap.data(), r.data(), n);
    const double rnorm = std::sqrt(kernels::dot(r.data(), r.data(), n));
    if (rnorm <= cfg.tolerance * bnorm) return {std::move(x), it, rnorm / bnorm};
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] =
        r[static_cast<std::size_t>(i)] * inv_diag;
    const double rz_next = kernels::dot(r.data(), z.data(), n);
    kernels::update_direction(z.data(), rz_next / rz, p.data(), n);
    rz = rz_next;
  }
  const double rnorm = std::sqrt(kernels::dot(r.data(), r.data(), n));
  return {std::move(x), budget, rnorm / bnorm};
}

}  // namespace

SolveResult solve(const DiscreteSystem& system, const SolverConfig& config) {
  config.validate();
  if (config.a != system.a)
    throw ConfigError("solver config and assembled system disagree on a");

  SolveResult res{ScalarField(system.grid), 0, 0.0, config.tolerance, 0.0, 0.0};
  std::vector<double> u_int;
  if (system.grid.dim() == 1) {
    u_int = solve_tridiagonal(system);
    res.iterations = 1;
  } else {
    const std::int64_t n = system.interior_count();
    const double bnorm = std::sqrt(
        kernels::dot(system.rhs.data(), system.rhs.data(), n));
    u_int.assign(static_cast<std::size_t>(n), 0.0);
    int spent = 0;
    if (bnorm > 0.0) {
      for (int pass = 0; pass < 4 && spent < config.max_iterations; ++pass) {
        CgOutcome out = solve_cg(system, config, std::move(u_int), bnorm,
                                 config.max_iterations - spent);
        u_int = std::move(out.u);
        spent += out.iterations;
        if (out.rel_residual <= config.tolerance) break;
      }
    }
    res.iterations = spent;
  }

  res.u.values.assign(system.boundary.begin(), system.boundary.end());
  system.embed_interior(u_int, res.u);
  res.residual = residual_norm(system, res.u);
  if (res.residual > config.tolerance && system.grid.dim() == 2)
    throw NoConvergence(res.iterations, res.residual);

  res.min_u = std::numeric_limits<double>::infinity();
  res.max_u = -std::numeric_limits<double>::infinity();
  for (std::int64_t idx = 0; idx < system.grid.num_nodes(); ++idx) {
    if (!system.grid.is_boundary(idx)) res.min_u = std::min(res.min_u, res.u[idx]);
    res.max_u = std::max(res.max_u, res.u[idx]);
  }
  return res;
}

double residual_norm(const DiscreteSystem& system, const ScalarField& u) {
  std::vector<double> ui = system.restrict_interior(u);
  std::vector<double> au(ui.size());
  system.apply(ui.data(), au.data());
  const std::int64_t n = system.interior_count();
  double num = 0.0, den = 0.0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double d = au[static_cast<std::size_t>(i)] -
                     system.rhs[static_cast<std::size_t>(i)];
    num += d * d;
    den += system.rhs[static_cast<std::size_t>(i)] *
           system.rhs[static_cast<std::size_t>(i)];
  }
  return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

BoundReport verify_bounds(const SolveResult& result, const SourceSpec& f,
                          const BoundarySpec& g) {
  const Grid& grid = result.u.grid;
  BoxShape box{{grid.lo(0), grid.dim() == 2 ? grid.lo(1) : 0.0},
               {grid.hi(0), grid.dim() == 2 ? grid.hi(1) : 0.0},
               grid.dim()};
  const double M = std::max(sup_source(f, box), sup_boundary(g, box));
  BoundReport rep{result.min_u, result.max_u, M, false, false};
  const double slack = result.tolerance * M;
  rep.positive_ok = result.min_u > -slack;
  rep.upper_ok = result.max_u <= M + slack;
  return rep;
}

}  // namespace sdist
