#include <doctest.h>

#include <cmath>
#include <random>

#include "sdist/geometry.hpp"
#include "test_helpers.hpp"

using namespace sdist;
using sdist::testing::brute_distance;

namespace {

const Shape kInterval{Interval{0.0, 2.0 / 3.0}};
const Shape kDisk{Ball{{0.0, 0.0}, 0.5}};
const Shape kRing{Annulus{{0.0, 0.0}, 0.3, 0.6}};

Shape two_intervals() {
  ShapeUnion u;
  u.members.push_back(Shape{Interval{-0.4, 0.2}});
  u.members.push_back(Shape{Interval{0.4, 0.2}});
  return Shape{std::move(u)};
}

}  // namespace

TEST_CASE("exact distance closed forms") {
  CHECK(exact_distance(kInterval, {0.0, 0.0}) == doctest::Approx(2.0 / 3.0));
  CHECK(exact_distance(kDisk, {0.5, 0.0}) == doctest::Approx(0.0));
  // Against the exhaustive boundary-sample oracle.
  CHECK(exact_distance(kRing, {0.4, 0.0}) ==
        doctest::Approx(brute_distance(kRing, {0.4, 0.0})).epsilon(1e-6));
  CHECK(exact_distance(kRing, {0.4, 0.0}) == doctest::Approx(0.1));
}

TEST_CASE("signed distance sign convention") {
  CHECK(exact_signed_distance(kInterval, {0.0, 0.0}) ==
        doctest::Approx(-2.0 / 3.0));
  CHECK(exact_signed_distance(kDisk, {0.7, 0.0}) == doctest::Approx(0.2));
  const Shape u = two_intervals();
  // Between the two pieces: positive, minimum over both.
  CHECK(exact_signed_distance(u, {0.0, 0.0}) ==
        doctest::Approx(brute_distance(u, {0.0, 0.0})).epsilon(1e-9));
  CHECK(exact_signed_distance(u, {0.0, 0.0}) == doctest::Approx(0.2));
  // Inside one piece: negative.
  CHECK(exact_signed_distance(u, {0.4, 0.0}) == doctest::Approx(-0.2));
}

TEST_CASE("|signed| equals unsigned distance and 1-Lipschitz") {
  const BoxShape box{{-1, -1}, {1, 1}, 2};
  for (const Shape* s : {&kDisk, &kRing}) {
    const auto pts = sdist::testing::random_points_in_box(box, 300, 77);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      CHECK(std::abs(exact_signed_distance(*s, pts[i])) ==
            doctest::Approx(exact_distance(*s, pts[i])));
      if (i > 0) {
        const double dd =
            std::abs(exact_distance(*s, pts[i]) - exact_distance(*s, pts[i - 1]));
        const double step = std::hypot(pts[i][0] - pts[i - 1][0],
                                       pts[i][1] - pts[i - 1][1]);
        CHECK(dd <= step + 1e-12);
      }
    }
  }
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(validate_shape(Shape{Interval{0.0, -1.0}}), ConfigError);
  CHECK_THROWS_AS(validate_shape(Shape{Annulus{{0, 0}, 0.5, 0.4}}), ConfigError);
  ShapeUnion touching;
  touching.members.push_back(Shape{Interval{-0.2, 0.2}});
  touching.members.push_back(Shape{Interval{0.2, 0.2}});
  CHECK_THROWS_AS(validate_shape(Shape{std::move(touching)}), ConfigError);
  CHECK_NOTHROW(validate_shape(two_intervals()));
}

TEST_CASE("design domain gap") {
  CHECK_NOTHROW(DesignDomain(BoxShape{{-1, 0}, {1, 0}, 1}, kInterval));
  const DesignDomain dom(BoxShape{{-1, -1}, {1, 1}, 2}, kDisk);
  CHECK(dom.gap() == doctest::Approx(0.5));
  // Region reaching the wall is rejected.
  CHECK_THROWS_AS(DesignDomain(BoxShape{{-0.5, -0.5}, {0.5, 0.5}, 2}, kDisk),
                  ConfigError);
}

TEST_CASE("interface rasterization band") {
  const Grid g1 = Grid::make_1d(201, -1.0, 1.0);  // spacing 0.01
  const NodeSet band = rasterize_interface(kInterval, g1);
  CHECK(band.nodes.size() >= 2);
  for (auto idx : band.nodes)
    CHECK(exact_distance(kInterval, g1.point(idx)) <= g1.spacing(0) + 1e-15);
  // Some node near each endpoint of the interval.
  bool near_neg = false, near_pos = false;
  for (auto idx : band.nodes) {
    const double x = g1.point(idx)[0];
    near_neg |= std::abs(x + 2.0 / 3.0) <= g1.spacing(0);
    near_pos |= std::abs(x - 2.0 / 3.0) <= g1.spacing(0);
  }
  CHECK(near_neg);
  CHECK(near_pos);

  const Grid g2 = Grid::make_2d(257, 257, {-1, -1}, {1, 1});
  const NodeSet band2 = rasterize_interface(kDisk, g2);
  CHECK(!band2.nodes.empty());
  for (auto idx : band2.nodes)
    CHECK(exact_distance(kDisk, g2.point(idx)) <= g2.max_spacing() + 1e-15);

  // Spacing 2.0 cannot resolve a radius-0.5 disk.
  const Grid coarse = Grid::make_2d(5, 5, {-4, -4}, {4, 4});
  CHECK(coarse.max_spacing() == doctest::Approx(2.0));
  CHECK_THROWS_AS(rasterize_interface(kDisk, coarse), EmptyInterface);
}

TEST_CASE("omega star mask") {
  const DesignDomain dom(BoxShape{{-1, 0}, {1, 0}, 1}, kInterval);
  const Grid g = Grid::make_1d(61, -1.0, 1.0);  // nodes at multiples of 1/30
  const Mask m = omega_star_mask(dom, g);
  auto at = [&](double x) {
    return m[g.index(static_cast<int>(std::lround((x + 1.0) / g.spacing(0))))];
  };
  CHECK(at(0.0));        // d to interface 2/3 <= d to wall 1
  CHECK_FALSE(at(0.9));  // 0.2333 > 0.1
  // Interface node itself: 0 <= anything.
  const Grid g3 = Grid::make_1d(7, -1.0, 1.0);  // 2/3 is a node
  const Mask m3 = omega_star_mask(DesignDomain(BoxShape{{-1, 0}, {1, 0}, 1},
                                               kInterval),
                                  g3);
  CHECK(m3[g3.index(5)]);  // x = 2/3

  // Every region node closer to the interface than the design gap is kept.
  const DesignDomain dom2(BoxShape{{-1, -1}, {1, 1}, 2}, kDisk);
  const Grid g2 = Grid::make_2d(129, 129, {-1, -1}, {1, 1});
  const Mask m2 = omega_star_mask(dom2, g2);
  for (std::int64_t idx = 0; idx < g2.num_nodes(); ++idx) {
    const Point p = g2.point(idx);
    if (inside_closure(kDisk, p) && exact_distance(kDisk, p) <= dom2.gap())
      CHECK(m2[idx]);
  }
}

TEST_CASE("brute-force distance oracle") {
  // Single interface point: the field is the plain Euclidean distance.
  const Grid g = Grid::make_2d(33, 33, {-1, -1}, {1, 1});
  NodeSet one{g, {g.index(16, 16)}};
  const ScalarField f = brute_force_distance_field(one, g);
  for (std::int64_t idx = 0; idx < g.num_nodes(); ++idx) {
    const Point p = g.point(idx);
    CHECK(f[idx] == doctest::Approx(std::hypot(p[0], p[1])).epsilon(1e-12));
  }

  // Band-based field tracks the exact oracle to within two spacings.
  for (const Shape* s : {&kInterval}) {
    const Grid g1 = Grid::make_1d(513, -1.0, 1.0);
    const ScalarField bf =
        brute_force_distance_field(rasterize_interface(*s, g1), g1);
    const ScalarField ex = exact_distance_field(*s, g1);
    double sup = 0.0;
    for (std::int64_t i = 0; i < g1.num_nodes(); ++i)
      sup = std::max(sup, std::abs(bf[i] - ex[i]));
    CHECK(sup <= 2.0 * g1.spacing(0));
  }
  for (const Shape* s : {&kDisk, &kRing}) {
    const Grid g2 = Grid::make_2d(257, 257, {-1, -1}, {1, 1});
    const ScalarField bf =
        brute_force_distance_field(rasterize_interface(*s, g2), g2);
    const ScalarField ex = exact_distance_field(*s, g2);
    double sup = 0.0;
    for (std::int64_t i = 0; i < g2.num_nodes(); ++i)
      sup = std::max(sup, std::abs(bf[i] - ex[i]));
    CHECK(sup <= 2.0 * g2.max_spacing());
  }
}

TEST_CASE("exterior ball radius bookkeeping") {
  CHECK(std::isinf(exterior_ball_radius(kDisk)));
  CHECK(exterior_ball_radius(kRing) == doctest::Approx(0.3));
}
