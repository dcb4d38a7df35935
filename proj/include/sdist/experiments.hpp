#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sdist/geometry.hpp"
#include "sdist/solver.hpp"
#include "sdist/transform.hpp"

namespace sdist {

enum class OracleKind { Exact, BruteForce };
enum class TransformKind { Distance, Signed };

struct GridRule {
  // Tied mode: per-axis cell count is the smallest power of two whose
  // spacing does not exceed sqrt(a)/spacing_factor. Fixed mode uses the
  // given node count on every axis for every a.
  bool tied = true;
  double spacing_factor = 8.0;
  int fixed_nodes = 0;

  Grid build(const BoxShape& box, double a) const;
};

struct CaseSpec {
  DesignDomain domain;
  SourceSpec source;
  BoundarySpec boundary;
  std::vector<double> a_list;  // strictly decreasing
  GridRule grid_rule;
  OracleKind oracle = OracleKind::Exact;
  TransformKind transform = TransformKind::Distance;
  std::optional<double> c_star;  // signed transform amplitude
  double tolerance = 1e-10;
  int max_iterations = 50000;

  void validate() const;
  double c_star_value() const;
};

struct SweepRow {
  double a = 0.0;
  double spacing = 0.0;
  double sup_error = 0.0;
  double beta = 0.0;
  double scaled_log_beta = 0.0;
  int iterations = 0;
  double wall_time = 0.0;  // seconds; measurement, not part of determinism
};

struct SweepTable {
  std::vector<SweepRow> rows;
  std::vector<std::string> row_errors;  // empty string when the row succeeded

  std::vector<SweepRow> successful() const;
};

// One assemble/solve/transform/compare pass per requested a.
SweepTable run_sweep(const CaseSpec& spec);

// Detailed single-a result, for plots and field export.
struct CaseRun {
  Grid grid;
  SolveResult solve;
  TransformResult transform;
  ScalarField oracle;
  Mask region;  // comparison region used for the sup error
  SweepRow row;
};

CaseRun run_case(const CaseSpec& spec, double a);

enum class RateModel { Power, SqrtLog };

struct RateFit {
  RateModel model;
  double exponent = 0.0;  // power model: slope of log(err) vs log(a)
  double constant = 0.0;  // sqrtlog model: err ~ C sqrt(a) log(1/a)
  double r_squared = 0.0;
};

// Needs at least 3 successful rows.
RateFit fit_rate(const SweepTable& table, RateModel model);

// Fixed header: a,spacing,sup_error,beta,scaled_log_beta,iterations,wall_time
void emit_csv(const SweepTable& table, const std::string& path);

// coords, computed, oracle, error rows over the comparison region.
void emit_transform_csv(const CaseRun& run, const std::string& path);

}  // namespace sdist
