#include <doctest.h>

#include <array>
#include <cmath>

#include "sdist/sources.hpp"
#include "test_helpers.hpp"

using namespace sdist;

namespace {

const double kK = 2.0 / 3.0;

}  // namespace

TEST_CASE("source evaluation") {
  const SourceSpec pl{PowerLaw1D{kK, 2.0}};
  CHECK(evaluate_source(pl, {0.5, 0.0}) == 0.0);
  CHECK(evaluate_source(pl, {1.0, 0.0}) == doctest::Approx(1.0 / 9.0));

  const SourceSpec ind{IndicatorComplement{Shape{Ball{{0, 0}, 0.5}}, 1.0}};
  CHECK(evaluate_source(ind, {0.9, 0.0}) == 1.0);
  CHECK(evaluate_source(ind, {0.3, 0.0}) == 0.0);
}

TEST_CASE("sources are nonnegative and vanish on their zero set") {
  const std::array<SourceSpec, 3> specs{
      SourceSpec{PowerLaw1D{kK, 2.0}},
      SourceSpec{IndicatorComplement{Shape{Ball{{0, 0}, 0.5}}, 2.0}},
      SourceSpec{PowerLawBall{Ball{{0, 0}, 0.5}, 1.0}}};
  for (const auto& spec : specs) {
    const Shape z = zero_set(spec);
    const BoxShape box{{-1, -1}, {1, 1}, z.dim()};
    int on_zero_set = 0;
    for (const Point& p :
         sdist::testing::random_points_in_box(box, 10000, 123)) {
      const double v = evaluate_source(spec, p);
      CHECK(v >= 0.0);
      if (inside_closure(z, p)) {
        CHECK(v == 0.0);
        ++on_zero_set;
      }
    }
    CHECK(on_zero_set > 100);
  }
}

TEST_CASE("mean condition scan") {
  // 1D indicator: the mean at the interface tends to amplitude/2.
  const double c = 2.0;
  const SourceSpec ind{IndicatorComplement{Shape{Interval{0.0, kK}}, c}};
  const Grid g = Grid::make_1d(8193, -1.0, 1.0);
  const std::array<double, 3> eps{0.02, 0.05, 0.1};
  const MeanScan scan =
      mean_condition_scan(ind, zero_set(ind), 0.0, 1, g, eps);
  CHECK(scan.inf >= 0.4 * c);
  CHECK(scan.sup <= 0.6 * c);

  // Correctly declared exponent: bounded ratio. Wrong exponent: the ratio
  // grows like (eps_max/eps_min)^{zeta p}.
  const SourceSpec plb{PowerLawBall{Ball{{0, 0}, 0.5}, 1.0}};
  const Grid g2 = Grid::make_2d(1025, 1025, {-1, -1}, {1, 1});
  const std::array<double, 3> eps2{0.05, 0.1, 0.2};
  const MeanScan good =
      mean_condition_scan(plb, zero_set(plb), 1.0, 1, g2, eps2);
  CHECK(good.inf > 0.0);
  CHECK(good.sup / good.inf < 3.0);
  const MeanScan bad =
      mean_condition_scan(plb, zero_set(plb), 0.0, 1, g2, eps2);
  CHECK(bad.sup / bad.inf > 0.6 * 4.0);  // ~ (0.2/0.05)^1
  CHECK(bad.sup / bad.inf > 2.0 * good.sup / good.inf);
}

TEST_CASE("scan bracket widens under radius refinement") {
  const SourceSpec pl{PowerLaw1D{kK, 1.0}};
  const Grid g = Grid::make_1d(8193, -1.0, 1.0);
  const std::array<double, 2> few{0.05, 0.1};
  const std::array<double, 4> more{0.02, 0.05, 0.1, 0.2};
  const MeanScan a = mean_condition_scan(pl, zero_set(pl), 1.0, 1, g, few);
  const MeanScan b = mean_condition_scan(pl, zero_set(pl), 1.0, 1, g, more);
  CHECK(b.inf <= a.inf + 1e-15);
  CHECK(b.sup >= a.sup - 1e-15);
}

TEST_CASE("zeta recovery on 1D power laws") {
  const Grid g = Grid::make_1d(8193, -1.0, 1.0);
  const std::array<double, 4> eps{0.02, 0.05, 0.1, 0.2};
  for (double zeta : {0.0, 1.0, 2.0}) {
    const SourceSpec pl{PowerLaw1D{kK, zeta}};
    const double zh = estimate_zeta(pl, zero_set(pl), g, eps);
    CHECK(std::abs(zh - zeta) <= 0.15);
  }
}

TEST_CASE("zeta estimate preconditions") {
  const Grid g = Grid::make_1d(1025, -1.0, 1.0);
  const SourceSpec pl{PowerLaw1D{kK, 1.0}};
  const std::array<double, 3> three{0.02, 0.05, 0.2};
  CHECK_THROWS_AS(estimate_zeta(pl, zero_set(pl), g, three), ConfigError);
  const std::array<double, 4> narrow{0.05, 0.08, 0.1, 0.2};
  CHECK_THROWS_AS(estimate_zeta(pl, zero_set(pl), g, narrow), ConfigError);
}

TEST_CASE("source validation") {
  // Amplitude zero would make the zero set the whole box.
  const SourceSpec degenerate{
      IndicatorComplement{Shape{Interval{0.0, 0.5}}, 0.0}};
  CHECK_THROWS_AS(validate_source(degenerate), ConfigError);
  const SourceSpec bad_zeta{PowerLaw1D{0.5, -1.0}};
  CHECK_THROWS_AS(validate_source(bad_zeta), ConfigError);
}

TEST_CASE("boundary data") {
  const BoundarySpec g{BoundaryConstant{0.7}};
  CHECK(evaluate_boundary(g, {1.0, 0.3}) == 0.7);
  CHECK(sup_boundary(g, BoxShape{{-1, -1}, {1, 1}, 2}) == 0.7);
  const BoundarySpec cb{
      BoundaryCallable{[](Point p) { return 1.0 + 0.5 * p[0]; }}};
  CHECK(sup_boundary(cb, BoxShape{{-1, -1}, {1, 1}, 2}) ==
        doctest::Approx(1.5));
}
