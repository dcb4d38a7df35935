#pragma once

#include "sdist/grid.hpp"

namespace sdist {

// Result of a log transform of the solution field. `field` holds NaN off
// the validity mask; `excluded` counts nodes dropped for underflow.
struct TransformResult {
  ScalarField field;
  Mask validity;
  std::int64_t excluded = 0;
  double beta = 0.0;            // interface infimum, when attached
  double scaled_log_beta = 0.0; // sqrt(a) * log(beta)
  double c_star = 0.0;          // amplitude used by the signed variant

  TransformResult(const Grid& g) : field(g), validity(g) {}
};

// -sqrt(a) * log u on `region`; u must be positive there. Nodes with
// u below 1e-300 are excluded from the validity mask and counted.
TransformResult distance_field(const ScalarField& u, double a,
                               const Mask& region);

// Two-branch signed transform:
//   sqrt(a) log u           on the region (negative inside),
//   -sqrt(a) log (C* - u)   outside it,
// defined on interior nodes. Trustworthy only on `region_omega_star`;
// u >= C* inside that mask raises BranchDomainViolation, outside it the
// node is just excluded.
TransformResult signed_distance_field(const ScalarField& u, double a,
                                      double c_star, const Mask& region_A,
                                      const Mask& region_omega_star);

struct BetaDiagnostic {
  double beta;
  double scaled_log;  // sqrt(a) * log(beta)
};

// Infimum of the solution over the interface band.
BetaDiagnostic beta_diagnostic(const ScalarField& u, const NodeSet& interface,
                               double a);

// Maximum of |computed - oracle| over the region (intersected with the
// computed field's validity when it has NaNs).
double sup_error(const ScalarField& computed, const ScalarField& oracle,
                 const Mask& region);

}  // namespace sdist
