#include <doctest.h>

#include <cmath>
#include <random>

#include "sdist/analytic.hpp"
#include "sdist/solver.hpp"

using namespace sdist;

namespace {

SourceSpec zero_source_1d() {
  return SourceSpec{
      CustomSource{[](Point) { return 0.0; }, Shape{Interval{0.0, 0.5}}, {}}};
}

DesignDomain domain_1d() {
  return DesignDomain(BoxShape{{-1, 0}, {1, 0}, 1}, Shape{Interval{0.0, 0.5}});
}

DesignDomain domain_2d() {
  return DesignDomain(BoxShape{{-1, -1}, {1, 1}, 2},
                      Shape{Ball{{0.0, 0.0}, 0.5}});
}

double varadhan_error(double a, int nodes) {
  const Grid grid = Grid::make_1d(nodes, -1.0, 1.0);
  DiscreteSystem sys = assemble(domain_1d(), grid, a, zero_source_1d(),
                                BoundarySpec{BoundaryConstant{1.0}});
  SolveResult res = solve(sys, SolverConfig{a, 1e-10, 1000});
  double sup = 0.0;
  for (std::int64_t i = 0; i < grid.num_nodes(); ++i)
    sup = std::max(sup,
                   std::abs(res.u[i] - varadhan_1d(grid.point(i)[0], 1.0, a)));
  return sup;
}

}  // namespace

TEST_CASE("assembly stencil coefficients") {
  const double a = 0.04;
  const Grid grid = Grid::make_1d(9, -1.0, 1.0);  // spacing 0.25 > sqrt(a)/4?
  // sqrt(0.04)/4 = 0.05 < 0.25: must refuse.
  CHECK_THROWS_AS(assemble(domain_1d(), grid, a, zero_source_1d(),
                           BoundarySpec{BoundaryConstant{1.0}}),
                  GridTooCoarse);

  const Grid fine = Grid::make_1d(129, -1.0, 1.0);
  DiscreteSystem sys = assemble(domain_1d(), fine, a, zero_source_1d(),
                                BoundarySpec{BoundaryConstant{1.0}});
  const double h = fine.spacing(0);
  CHECK(sys.cx == doctest::Approx(a / (h * h)));
  CHECK(sys.diag == doctest::Approx(1.0 + 2.0 * a / (h * h)));
  CHECK(sys.diag >= 1.0);
  // Homogeneous source: the right-hand side is the boundary lift alone.
  CHECK(sys.rhs.front() == doctest::Approx(sys.cx));
  CHECK(sys.rhs.back() == doctest::Approx(sys.cx));
  for (std::size_t i = 1; i + 1 < sys.rhs.size(); ++i) CHECK(sys.rhs[i] == 0.0);
}

TEST_CASE("2D stencil row sums preserve constants") {
  const double a = 0.01;
  const Grid grid = Grid::make_2d(129, 129, {-1, -1}, {1, 1});
  DiscreteSystem sys = assemble(domain_2d(), grid, a, zero_source_1d(),
                                BoundarySpec{BoundaryConstant{0.0}});
  std::vector<double> ones(static_cast<std::size_t>(sys.interior_count()), 1.0);
  std::vector<double> out(ones.size());
  sys.apply(ones.data(), out.data());
  // Interior rows away from the boundary: identity survives the Laplacian.
  const std::int64_t nyi = grid.nodes(1) - 2;
  CHECK(out[static_cast<std::size_t>(60 * nyi + 60)] == doctest::Approx(1.0));
}

TEST_CASE("homogeneous 1D solve reproduces the cosh profile at second order") {
  const double a = 1e-2;
  const double e257 = varadhan_error(a, 257);
  CHECK(e257 <= 1.2e-4);
  const double e129 = varadhan_error(a, 129);
  const double e513 = varadhan_error(a, 513);
  const double order1 = std::log2(e129 / e257);
  const double order2 = std::log2(e257 / e513);
  CHECK(order1 == doctest::Approx(2.0).epsilon(0.05));
  CHECK(order2 == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("constant data gives the constant solution") {
  const double a = 0.01, c = 0.7;
  const Grid grid = Grid::make_1d(257, -1.0, 1.0);
  SourceSpec f{CustomSource{[=](Point) { return c; },
                            Shape{Interval{0.0, 0.5}},
                            {}}};
  DiscreteSystem sys =
      assemble(domain_1d(), grid, a, f, BoundarySpec{BoundaryConstant{c}});
  SolveResult res = solve(sys, SolverConfig{a, 1e-10, 10});
  for (std::int64_t i = 0; i < grid.num_nodes(); ++i)
    CHECK(res.u[i] == doctest::Approx(c).epsilon(1e-13));
}

TEST_CASE("discrete solve matches the 1D closed form with a source") {
  const double a = 1e-3, h = 1.0, k = 2.0 / 3.0, alpha = 1.0, zeta = 2.0;
  const int cells = cells_for_spacing(2.0, std::sqrt(a) / 8.0);
  const Grid grid = Grid::make_1d(cells + 1, -1.0, 1.0);
  DesignDomain dom(BoxShape{{-1, 0}, {1, 0}, 1}, Shape{Interval{0.0, k}});
  DiscreteSystem sys = assemble(dom, grid, a, SourceSpec{PowerLaw1D{k, zeta}},
                                BoundarySpec{BoundaryConstant{alpha}});
  SolveResult res = solve(sys, SolverConfig{a, 1e-10, 10});
  Example1d ex(h, k, alpha, zeta, a);
  double sup = 0.0;
  for (std::int64_t i = 0; i < grid.num_nodes(); ++i)
    sup = std::max(sup, std::abs(res.u[i] - ex.value(grid.point(i)[0])));
  const double hs = grid.spacing(0);
  CHECK(sup <= 100.0 * hs * hs);
}

TEST_CASE("residual norms") {
  const double a = 0.01;
  const Grid grid = Grid::make_1d(257, -1.0, 1.0);
  DiscreteSystem sys = assemble(domain_1d(), grid, a, zero_source_1d(),
                                BoundarySpec{BoundaryConstant{1.0}});
  SolveResult res = solve(sys, SolverConfig{a, 1e-10, 10});
  CHECK(res.residual <= 1e-12);
  CHECK(residual_norm(sys, res.u) <= 1e-12);

  ScalarField zero(grid);
  CHECK(residual_norm(sys, zero) == doctest::Approx(1.0));

  const Grid g2 = Grid::make_2d(129, 129, {-1, -1}, {1, 1});
  SourceSpec ind{IndicatorComplement{Shape{Ball{{0, 0}, 0.5}}, 1.0}};
  DiscreteSystem sys2 =
      assemble(domain_2d(), g2, a, ind, BoundarySpec{BoundaryConstant{1.0}});
  SolveResult res2 = solve(sys2, SolverConfig{a, 1e-10, 10000});
  CHECK(res2.residual <= 1e-10);
  CHECK(res2.iterations > 1);
}

TEST_CASE("iteration cap raises NoConvergence") {
  const double a = 0.01;
  const Grid g2 = Grid::make_2d(129, 129, {-1, -1}, {1, 1});
  SourceSpec ind{IndicatorComplement{Shape{Ball{{0, 0}, 0.5}}, 1.0}};
  DiscreteSystem sys =
      assemble(domain_2d(), g2, a, ind, BoundarySpec{BoundaryConstant{1.0}});
  CHECK_THROWS_AS(solve(sys, SolverConfig{a, 1e-10, 2}), NoConvergence);
}

TEST_CASE("bound report") {
  const double a = 0.01;
  const Grid grid = Grid::make_1d(257, -1.0, 1.0);
  DiscreteSystem sys = assemble(domain_1d(), grid, a, zero_source_1d(),
                                BoundarySpec{BoundaryConstant{1.0}});
  SolveResult res = solve(sys, SolverConfig{a, 1e-10, 10});
  BoundReport rep =
      verify_bounds(res, zero_source_1d(), BoundarySpec{BoundaryConstant{1.0}});
  CHECK(rep.bound == doctest::Approx(1.0));
  CHECK(rep.pass());
  CHECK(rep.min_u > 0.0);
  CHECK(rep.max_u <= 1.0 + 1e-12);

  // A corrupted solution is flagged.
  res.u[grid.num_nodes() / 2] *= -1.0;
  res.min_u = -std::abs(res.u[grid.num_nodes() / 2]);
  BoundReport bad =
      verify_bounds(res, zero_source_1d(), BoundarySpec{BoundaryConstant{1.0}});
  CHECK_FALSE(bad.pass());
}

TEST_CASE("solution symmetry for symmetric data") {
  const double a = 1e-3;
  const Grid grid = Grid::make_1d(513, -1.0, 1.0);
  DesignDomain dom(BoxShape{{-1, 0}, {1, 0}, 1},
                   Shape{Interval{0.0, 2.0 / 3.0}});
  DiscreteSystem sys =
      assemble(dom, grid, a, SourceSpec{PowerLaw1D{2.0 / 3.0, 2.0}},
               BoundarySpec{BoundaryConstant{1.0}});
  SolveResult res = solve(sys, SolverConfig{a, 1e-10, 10});
  const std::int64_t n = grid.num_nodes();
  for (std::int64_t i = 0; i < n / 2; ++i)
    CHECK(res.u[i] == doctest::Approx(res.u[n - 1 - i]).epsilon(1e-12));
}

TEST_CASE("maximum principle and data monotonicity on random cases") {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> ua(std::log(5e-3), std::log(0.3));
  std::uniform_real_distribution<double> uc(0.2, 2.0);
  std::uniform_real_distribution<double> uk(0.3, 0.7);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = std::exp(ua(rng));
    const double amp = uc(rng);
    const double k = uk(rng);
    const double g0 = uc(rng);
    const int cells = cells_for_spacing(2.0, std::sqrt(a) / 8.0);
    const Grid grid = Grid::make_1d(cells + 1, -1.0, 1.0);
    DesignDomain dom(BoxShape{{-1, 0}, {1, 0}, 1}, Shape{Interval{0.0, k}});
    SourceSpec f1{IndicatorComplement{Shape{Interval{0.0, k}}, amp}};
    BoundarySpec g1{BoundaryConstant{g0}};
    SolveResult r1 =
        solve(assemble(dom, grid, a, f1, g1), SolverConfig{a, 1e-10, 10});
    const double M = std::max(amp, g0);
    CHECK(r1.min_u > 0.0);
    CHECK(r1.max_u <= M * (1.0 + 1e-12));

    // Larger data gives a larger solution, nodewise.
    SourceSpec f2{IndicatorComplement{Shape{Interval{0.0, k}}, amp * 1.5}};
    BoundarySpec g2{BoundaryConstant{g0 + 0.3}};
    SolveResult r2 =
        solve(assemble(dom, grid, a, f2, g2), SolverConfig{a, 1e-10, 10});
    for (std::int64_t i = 0; i < grid.num_nodes(); ++i)
      CHECK(r2.u[i] >= r1.u[i] - 1e-12 * M);
  }
}

TEST_CASE("solver config validation") {
  const SolverConfig bad_a{1e-9, 1e-10, 10};
  const SolverConfig bad_tol{0.01, 1e-3, 10};
  const SolverConfig bad_iters{0.01, 1e-10, 0};
  const SolverConfig good{0.01, 1e-12, 10};
  CHECK_THROWS_AS(bad_a.validate(), ConfigError);
  CHECK_THROWS_AS(bad_tol.validate(), ConfigError);
  CHECK_THROWS_AS(bad_iters.validate(), ConfigError);
  CHECK_NOTHROW(good.validate());
}
