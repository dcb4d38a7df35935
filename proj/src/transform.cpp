#include "sdist/transform.hpp"

#include <cmath>
#include <limits>

namespace sdist {

namespace {
constexpr double kUnderflowFloor = 1e-300;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}  // namespace

TransformResult distance_field(const ScalarField& u, double a,
                               const Mask& region) {
  if (!(u.grid == region.grid))
    throw ConfigError("field and region live on different grids");
  TransformResult out(u.grid);
  const double sqa = std::sqrt(a);
  for (std::int64_t idx = 0; idx < u.size(); ++idx) {
    if (!region[idx]) {
      out.field[idx] = kNaN;
      continue;
    }
    const double v = u[idx];
    if (v <= 0.0)
      throw NonPositiveSolution("nonpositive solution value inside the region");
    if (v < kUnderflowFloor) {
      out.field[idx] = kNaN;
      ++out.excluded;
      continue;
    }
    out.field[idx] = -sqa * std::log(v);
    out.validity.set(idx, true);
  }
  return out;
}

TransformResult signed_distance_field(const ScalarField& u, double a,
                                      double c_star, const Mask& region_A,
                                      const Mask& region_omega_star) {
  if (!(u.grid == region_A.grid) || !(u.grid == region_omega_star.grid))
    throw ConfigError("field and masks live on different grids");
  if (!(c_star > 0.0)) throw ConfigError("signed transform needs C* > 0");
  TransformResult out(u.grid);
  out.c_star = c_star;
  const double sqa = std::sqrt(a);
  for (std::int64_t idx = 0; idx < u.size(); ++idx) {
    if (u.grid.is_boundary(idx)) {
      out.field[idx] = kNaN;
      continue;
    }
    const double v = u[idx];
    if (region_A[idx]) {
      if (v <= 0.0)
        throw NonPositiveSolution("nonpositive solution value inside the region");
      if (v < kUnderflowFloor) {
        out.field[idx] = kNaN;
        ++out.excluded;
        continue;
      }
      out.field[idx] = sqa * std::log(v);
      out.validity.set(idx, true);
    } else {
      const double w = c_star - v;
      if (w <= 0.0) {
        if (region_omega_star[idx])
          throw BranchDomainViolation(
              "solution reaches C* at an exterior node of the trust region");
        out.field[idx] = kNaN;
        continue;
      }
      if (w < kUnderflowFloor) {
        out.field[idx] = kNaN;
        ++out.excluded;
        continue;
      }
      out.field[idx] = -sqa * std::log(w);
      out.validity.set(idx, true);
    }
  }
  return out;
}

BetaDiagnostic beta_diagnostic(const ScalarField& u, const NodeSet& interface,
                               double a) {
  if (interface.nodes.empty())
    throw EmptyInterface("beta diagnostic needs a nonempty interface");
  if (!(u.grid == interface.grid))
    throw ConfigError("field and interface live on different grids");
  double beta = std::numeric_limits<double>::infinity();
  for (auto idx : interface.nodes) beta = std::min(beta, u[idx]);
  if (beta <= 0.0)
    throw NonPositiveSolution("nonpositive solution value on the interface");
  return {beta, std::sqrt(a) * std::log(beta)};
}

double sup_error(const ScalarField& computed, const ScalarField& oracle,
                 const Mask& region) {
  if (!(computed.grid == oracle.grid) || !(computed.grid == region.grid))
    throw ConfigError("sup error needs matching grids");
  double sup = -1.0;
  for (std::int64_t idx = 0; idx < computed.size(); ++idx) {
    if (!region[idx]) continue;
    const double c = computed[idx];
    if (std::isnan(c)) continue;
    sup = std::max(sup, std::abs(c - oracle[idx]));
  }
  if (sup < 0.0) throw EmptyRegion("no valid node in the comparison region");
  return sup;
}

}  // namespace sdist
