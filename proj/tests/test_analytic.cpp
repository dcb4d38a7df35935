#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sdist/analytic.hpp"
#include "test_helpers.hpp"

using namespace sdist;

TEST_CASE("gamma function against exact values") {
  const double sp = std::sqrt(std::numbers::pi);
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gamma_fn(2.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gamma_fn(3.0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gamma_fn(4.0) == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(gamma_fn(0.5) == doctest::Approx(sp).epsilon(1e-12));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * sp).epsilon(1e-12));
  CHECK(gamma_fn(2.5) == doctest::Approx(0.75 * sp).epsilon(1e-12));
}

TEST_CASE("homogeneous 1D closed form") {
  CHECK(varadhan_1d(1.0, 1.0, 0.01) == doctest::Approx(1.0));
  CHECK(varadhan_1d(-1.0, 1.0, 0.01) == doctest::Approx(1.0));
  const double expected = 2.0 * std::exp(-10.0) / (1.0 + std::exp(-20.0));
  CHECK(varadhan_1d(0.0, 1.0, 0.01) ==
        doctest::Approx(expected).epsilon(1e-14));
  // The scaled log at the center approaches the wall distance; the gap is
  // exactly sqrt(a) log 2 in this geometry.
  const double a = 1e-4;
  const double val = -std::sqrt(a) * std::log(varadhan_1d(0.0, 1.0, a));
  CHECK(val == doctest::Approx(1.0 - std::sqrt(a) * std::numbers::ln2)
                   .epsilon(1e-10));
  CHECK(std::abs(val - 1.0) <= 0.01);
}

TEST_CASE("source-weighted coefficient") {
  // zeta = 0 admits a closed antiderivative; cross-check the quadrature.
  for (double a : {0.04, 0.01}) {
    const double c = 1.0 / std::sqrt(a);
    const double h = 1.0, k = 2.0 / 3.0, alpha = 1.0;
    const double closed =
        (alpha + std::cosh((h - k) * c) - 1.0) / std::cosh(h * c);
    CHECK(gamma_a(h, k, alpha, 0.0, a) ==
          doctest::Approx(closed).epsilon(1e-10));
  }

  // Small-a asymptotics: gamma ~ Gamma(1+zeta) a^{zeta/2} e^{-k/sqrt a}.
  {
    const double a = 1e-4, k = 2.0 / 3.0;
    const double asym = 2.0 * a * std::exp(-k / std::sqrt(a));
    const double ratio = gamma_a(1.0, k, 1.0, 2.0, a) / asym;
    CHECK(ratio >= 0.9);
    CHECK(ratio <= 1.1);
  }

  // Near a = 1 the boundary term dominates; both summands are positive.
  CHECK(gamma_a(1.0, 2.0 / 3.0, 1.0, 2.0, 1.0) >= 1.0 / std::cosh(1.0));
}

TEST_CASE("symmetric source closed form") {
  const double h = 1.0, k = 2.0 / 3.0, alpha = 1.0, zeta = 2.0;
  for (double a : {1e-2, 1e-3, 1e-4}) {
    Example1d ex(h, k, alpha, zeta, a);
    CHECK(ex.value(h) == doctest::Approx(alpha).epsilon(1e-8));
    CHECK(ex.value(-h) == doctest::Approx(alpha).epsilon(1e-8));
    CHECK(ex.log_value(0.0) == doctest::Approx(ex.log_gamma_coeff()));
    // Positivity across the domain.
    for (int i = 0; i <= 50; ++i) {
      const double x = -h + 2.0 * h * i / 50;
      CHECK(std::isfinite(ex.log_value(x)));
    }
  }

  // Scaled-log error against the wedge k - |x|: equals sqrt(a) log(1/a)
  // up to lower order at these parameters.
  {
    const double a = 1e-4;
    Example1d ex(h, k, alpha, zeta, a);
    double sup = 0.0;
    for (int i = 0; i <= 2000; ++i) {
      const double x = -k + 2.0 * k * i / 2000;
      const double err =
          std::abs(-std::sqrt(a) * ex.log_value(x) - (k - std::abs(x)));
      sup = std::max(sup, err);
    }
    CHECK(sup >= 0.085);
    CHECK(sup <= 0.0925);
  }
}

TEST_CASE("closed form satisfies the ODE") {
  const double h = 1.0, k = 2.0 / 3.0, alpha = 1.0, zeta = 2.0;
  for (double a : {1e-3, 1e-4}) {
    Example1d ex(h, k, alpha, zeta, a);
    const double delta = 3e-4 * std::sqrt(a);
    for (int i = 1; i < 100; ++i) {
      const double x = -h + 2.0 * h * i / 100;
      if (h - std::abs(x) < 3.0 * delta) continue;
      const double upp =
          (ex.value(x + delta) - 2.0 * ex.value(x) + ex.value(x - delta)) /
          (delta * delta);
      const double resid = -a * upp + ex.value(x) - ex.source(x);
      CHECK(std::abs(resid) <= 1e-6);
    }
  }
}

TEST_CASE("mean value kernel") {
  // 1D closed form.
  CHECK(mean_value_kernel(1, 0.3, 0.01) ==
        doctest::Approx(1.0 / std::cosh(3.0)).epsilon(1e-13));
  // Continuity limit.
  CHECK(mean_value_kernel(2, 1e-4, 1.0) == doctest::Approx(1.0).epsilon(1e-6));
  // Radial solution check: kappa * I0(eta/sqrt a) = I0(0) = 1.
  const double kappa = mean_value_kernel(2, 0.3, 0.01);
  CHECK(kappa * bessel_I(0.0, 3.0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("modified Bessel function") {
  CHECK(bessel_I(0.0, 0.0) == 1.0);
  CHECK(bessel_I(1.0, 0.0) == 0.0);
  // Half-integer reduction I_{1/2}(r) = sqrt(2/(pi r)) sinh r.
  for (double r : {0.5, 1.0, 5.0}) {
    const double exact =
        std::sqrt(2.0 / (std::numbers::pi * r)) * std::sinh(r);
    CHECK(bessel_I(0.5, r) == doctest::Approx(exact).epsilon(1e-10));
  }
  // Series oracle at r = 1.
  CHECK(bessel_I(0.0, 1.0) ==
        doctest::Approx(sdist::testing::bessel_i0_series(1.0)).epsilon(1e-12));
  // Scaled evaluation at large argument stays finite in log space.
  CHECK(std::isfinite(log_bessel_I(0.0, 600.0)));
}

TEST_CASE("center value from the sphere mean") {
  // Two independent routes to the same kernel.
  for (int N : {2, 3, 4}) {
    for (double ratio : {0.5, 1.0, 5.0}) {
      const double a = 0.01;
      const double eta = ratio * std::sqrt(a);
      const double via_kernel = mean_value_kernel(N, eta, a);
      const double via_bessel = mean_value_via_bessel(N, eta, a, 1.0);
      CHECK(via_bessel ==
            doctest::Approx(via_kernel).epsilon(1e-8));
    }
  }
  // Dimension dispatch for N = 1.
  CHECK(mean_value_via_bessel(1, 0.2, 0.01, 2.0) ==
        doctest::Approx(2.0 / std::cosh(2.0)).epsilon(1e-13));
}

TEST_CASE("exterior comparison solution") {
  const double a = 0.01, beta = 1.0;
  CHECK(exterior_solution(1, a, beta, std::sqrt(a)) ==
        doctest::Approx(beta * std::exp(-1.0)).epsilon(1e-13));
  CHECK(exterior_solution(2, a, beta, std::sqrt(a)) ==
        doctest::Approx(beta).epsilon(1e-10));

  // K0 route, frozen from an independent high-precision evaluation:
  // z(0.3) = K0(3)/K0(1).
  const double k0_1 = 0.42102443824070834;
  const double k0_3 = 0.034739504386279196;
  CHECK(exterior_solution(2, a, beta, 0.3) ==
        doctest::Approx(k0_3 / k0_1).epsilon(1e-8));

  const double scaled_log =
      -std::sqrt(a) * std::log(exterior_solution(2, a, beta, 0.3));
  CHECK(scaled_log >= 0.3 * (1.0 - a) - 0.05);
  CHECK(scaled_log <= 0.3 + 0.05);

  // Strictly decreasing and log-convex in the distance.
  double prev = exterior_solution(2, a, beta, std::sqrt(a));
  double prev_log = std::log(prev);
  double prev_slope = 0.0;
  bool first = true;
  for (int i = 1; i <= 20; ++i) {
    const double d = std::sqrt(a) + 0.02 * i;
    const double z = exterior_solution(2, a, beta, d);
    CHECK(z < prev);
    const double slope = (std::log(z) - prev_log) / 0.02;
    if (!first) CHECK(slope >= prev_slope - 1e-9);
    prev = z;
    prev_log = std::log(z);
    prev_slope = slope;
    first = false;
  }

  CHECK_THROWS_AS(exterior_solution(2, a, beta, 0.5 * std::sqrt(a)),
                  ConfigError);
}

TEST_CASE("quadrature settings are honored") {
  Quadrature q;
  q.panels = 15;
  CHECK_THROWS_AS(q.validate(), ConfigError);
  // Doubling panels moves the reported values by less than 1e-10.
  Quadrature q1;
  Quadrature q2;
  q2.panels = 1024;
  CHECK(std::abs(mean_value_kernel(2, 0.05, 0.01, q1) -
                 mean_value_kernel(2, 0.05, 0.01, q2)) < 1e-10);
  CHECK(std::abs(bessel_I(0.5, 5.0, q1) - bessel_I(0.5, 5.0, q2)) /
            bessel_I(0.5, 5.0, q1) <
        1e-10);
}
