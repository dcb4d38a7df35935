#include "sdist/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace sdist {

Grid GridRule::build(const BoxShape& box, double a) const {
  if (tied) {
    if (!(spacing_factor >= 4.0))
      throw ConfigError("tied grid rule needs spacing_factor >= 4");
    const double target = std::sqrt(a) / spacing_factor;
    if (box.dim == 1) {
      const int cells = cells_for_spacing(box.hi[0] - box.lo[0], target);
      return Grid::make_1d(cells + 1, box.lo[0], box.hi[0]);
    }
    const int cx = cells_for_spacing(box.hi[0] - box.lo[0], target);
    const int cy = cells_for_spacing(box.hi[1] - box.lo[1], target);
    return Grid::make_2d(cx + 1, cy + 1, box.lo, box.hi);
  }
  if (fixed_nodes < 3) throw ConfigError("fixed grid rule needs >= 3 nodes");
  if (box.dim == 1) return Grid::make_1d(fixed_nodes, box.lo[0], box.hi[0]);
  return Grid::make_2d(fixed_nodes, fixed_nodes, box.lo, box.hi);
}

void CaseSpec::validate() const {
  validate_source(source);
  if (a_list.empty()) throw ConfigError("sweep needs at least one a");
  for (std::size_t i = 0; i < a_list.size(); ++i) {
    if (!(a_list[i] >= 1e-8 && a_list[i] <= 1.0))
      throw ConfigError("every a must lie in [1e-8, 1]");
    if (i > 0 && !(a_list[i] < a_list[i - 1]))
      throw ConfigError("a list must be strictly decreasing");
  }
  if (!(tolerance > 0.0 && tolerance <= 1e-4))
    throw ConfigError("tolerance must lie in (0, 1e-4]");
  if (transform == TransformKind::Signed) {
    const double cs = c_star_value();
    if (!(cs >= sup_boundary(boundary, domain.omega)))
      throw ConfigError("signed transform needs C* >= sup g");
    const auto* ind = std::get_if<IndicatorComplement>(&source.v);
    if (ind == nullptr)
      throw ConfigError("signed transform needs an indicator source");
    if (std::abs(ind->amplitude - cs) > 1e-12)
      throw ConfigError("signed transform needs source amplitude C*");
  }
}

double CaseSpec::c_star_value() const {
  if (c_star) return *c_star;
  double amp = 0.0;
  if (const auto* ind = std::get_if<IndicatorComplement>(&source.v))
    amp = ind->amplitude;
  return std::max(sup_boundary(boundary, domain.omega), amp);
}

CaseRun run_case(const CaseSpec& spec, double a) {
  const auto t0 = std::chrono::steady_clock::now();
  const Grid grid = spec.grid_rule.build(spec.domain.omega, a);
  const Shape region_shape = zero_set(spec.source);

  DiscreteSystem sys = assemble(spec.domain, grid, a, spec.source, spec.boundary);
  SolverConfig cfg{a, spec.tolerance, spec.max_iterations};
  SolveResult sol = solve(sys, cfg);

  const Mask closure = closure_mask(region_shape, grid);
  const NodeSet band = rasterize_interface(region_shape, grid);

  CaseRun run{grid, std::move(sol), TransformResult(grid), ScalarField(grid),
              Mask(grid), SweepRow{}};

  if (spec.transform == TransformKind::Distance) {
    run.transform = distance_field(run.solve.u, a, closure);
    run.region = closure;
    if (spec.oracle == OracleKind::Exact)
      run.oracle = exact_distance_field(region_shape, grid);
    else
      run.oracle = brute_force_distance_field(band, grid);
  } else {
    const Mask omega_star = omega_star_mask(spec.domain, grid);
    run.transform = signed_distance_field(run.solve.u, a, spec.c_star_value(),
                                          closure, omega_star);
    run.region = omega_star;
    if (spec.oracle == OracleKind::Exact) {
      run.oracle = exact_signed_distance_field(region_shape, grid);
    } else {
      ScalarField dist = brute_force_distance_field(band, grid);
      run.oracle = dist;
      for (std::int64_t i = 0; i < dist.size(); ++i)
        if (closure[i]) run.oracle[i] = -dist[i];
    }
  }

  const BetaDiagnostic bd = beta_diagnostic(run.solve.u, band, a);
  run.transform.beta = bd.beta;
  run.transform.scaled_log_beta = bd.scaled_log;

  run.row.a = a;
  run.row.spacing = grid.max_spacing();
  run.row.sup_error = sup_error(run.transform.field, run.oracle, run.region);
  run.row.beta = bd.beta;
  run.row.scaled_log_beta = bd.scaled_log;
  run.row.iterations = run.solve.iterations;
  run.row.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return run;
}

SweepTable run_sweep(const CaseSpec& spec) {
  spec.validate();
  SweepTable table;
  for (double a : spec.a_list) {
    try {
      CaseRun run = run_case(spec, a);
      table.rows.push_back(run.row);
      table.row_errors.emplace_back();
    } catch (const Error& e) {
      SweepRow row{};
      row.a = a;
      table.rows.push_back(row);
      table.row_errors.emplace_back(e.what());
    }
  }
  return table;
}

std::vector<SweepRow> SweepTable::successful() const {
  std::vector<SweepRow> ok;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (row_errors[i].empty()) ok.push_back(rows[i]);
  return ok;
}

RateFit fit_rate(const SweepTable& table, RateModel model) {
  const auto rows = table.successful();
  if (rows.size() < 3)
    throw InsufficientRows("rate fit needs at least 3 successful rows");
  RateFit fit{model, 0.0, 0.0, 0.0};
  const double n = static_cast<double>(rows.size());

  if (model == RateModel::Power) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : rows) {
      const double x = std::log(r.a);
      const double y = std::log(r.sup_error);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    fit.exponent = slope;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (const auto& r : rows) {
      const double y = std::log(r.sup_error);
      const double yhat = slope * std::log(r.a) + intercept;
      ss_res += (y - yhat) * (y - yhat);
      ss_tot += (y - mean_y) * (y - mean_y);
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
  }

  // err = C * sqrt(a) * log(1/a), least squares through the origin.
  double szz = 0, szy = 0, sy = 0;
  for (const auto& r : rows) {
    const double z = std::sqrt(r.a) * std::log(1.0 / r.a);
    szz += z * z;
    szy += z * r.sup_error;
    sy += r.sup_error;
  }
  fit.constant = szy / szz;
  double ss_res = 0, ss_tot = 0;
  const double mean_y = sy / n;
  for (const auto& r : rows) {
    const double z = std::sqrt(r.a) * std::log(1.0 / r.a);
    const double res = r.sup_error - fit.constant * z;
    ss_res += res * res;
    ss_tot += (r.sup_error - mean_y) * (r.sup_error - mean_y);
  }
  fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
  return fit;
}

void emit_csv(const SweepTable& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "a,spacing,sup_error,beta,scaled_log_beta,iterations,wall_time\n";
  char buf[256];
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (!table.row_errors[i].empty()) continue;  // failed rows are excluded
    const auto& r = table.rows[i];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%d,%.6f\n",
                  r.a, r.spacing, r.sup_error, r.beta, r.scaled_log_beta,
                  r.iterations, r.wall_time);
    out << buf;
  }
  if (!out) throw IoError("write failed: " + path);
}

void emit_transform_csv(const CaseRun& run, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << (run.grid.dim() == 1 ? "x,computed,oracle,error\n"
                              : "x,y,computed,oracle,error\n");
  char buf[192];
  for (std::int64_t idx = 0; idx < run.grid.num_nodes(); ++idx) {
    if (!run.region[idx] || !run.transform.validity[idx]) continue;
    const Point p = run.grid.point(idx);
    const double c = run.transform.field[idx];
    const double o = run.oracle[idx];
    if (run.grid.dim() == 1)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p[0], c, o,
                    std::abs(c - o));
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p[0],
                    p[1], c, o, std::abs(c - o));
    out << buf;
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace sdist
