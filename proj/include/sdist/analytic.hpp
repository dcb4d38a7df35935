#pragma once

#include "sdist/errors.hpp"

namespace sdist {

// Quadrature settings for the closed-form module. Semi-infinite integrals
// are truncated where the integrand drops below 1e-16 of its peak; the
// truncation parameter bounds the search.
struct Quadrature {
  int panels = 512;
  double truncation = 40.0;

  void validate() const {
    if (panels < 16 || panels % 2 != 0)
      throw ConfigError("quadrature panel count must be even and >= 16");
    if (!(truncation > 1.0))
      throw ConfigError("quadrature truncation must exceed 1");
  }
};

// Composite Simpson on [a, b].
template <class F>
double simpson(F&& f, double a, double b, int panels) {
  const int n = 2 * panels;
  const double h = (b - a) / n;
  double sum = f(a) + f(b);
  for (int i = 1; i < n; ++i) sum += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return sum * h / 3.0;
}

// Gamma function for x > 0 (Lanczos approximation, relative error ~1e-13).
double gamma_fn(double x);
double log_gamma_fn(double x);

// log(cosh t) without overflow.
double log_cosh(double t);
// log(e^a + e^b) with -inf allowed.
double log_sum_exp(double a, double b);

// Solution of -a u'' + u = 0 on (-h, h) with u(+-h) = 1, evaluated in
// log-space: exp((|x|-h)/sqrt(a)) * (1+e^{-2|x|/sqrt a}) / (1+e^{-2h/sqrt a}).
double varadhan_1d(double x, double h, double a);

// Closed form for the symmetric 1D problem -a u'' + u = f on (-h, h),
// u(+-h) = alpha, with f = (|x|-k)^zeta for |x| >= k and 0 otherwise.
// All hyperbolic factors are evaluated in log-space; the subtraction of the
// two exponentially large terms on (k, h] is regrouped analytically so no
// catastrophic cancellation occurs.
class Example1d {
 public:
  Example1d(double h, double k, double alpha, double zeta, double a,
            Quadrature q = {});

  double log_gamma_coeff() const { return log_gamma_; }
  double gamma_coeff() const;

  // log u(x) for |x| <= h; u(x) by exponentiation (may underflow for
  // very small a deep inside the zero set -- use log_value there).
  double log_value(double x) const;
  double value(double x) const;

  double source(double x) const;

 private:
  double h_, k_, alpha_, zeta_, a_, c_;
  Quadrature q_;
  double log_gamma_ = 0.0;
  double log_j_h_ = 0.0;   // log of the source integral at x = h
  double glow_h_ = 0.0;    // int_0^{T_h} s^zeta e^{-s} ds
  double e_h_ = 0.0;       // e^{-T_h} int_0^{T_h} (T_h - w)^zeta e^{-w} dw
  double t_h_ = 0.0;

  double lower_gamma(double T) const;
  double e_term(double T) const;
};

double gamma_a(double h, double k, double alpha, double zeta, double a,
               Quadrature q = {});
double example1d_solution(double x, double h, double k, double alpha,
                          double zeta, double a, Quadrature q = {});

// Multiplicative factor kappa(N, eta, a) with h(center) = kappa * S_eta(h)
// for any solution of a*Laplace(h) = h on the ball:
//   N = 1:   1 / cosh(eta/sqrt a)
//   N >= 2:  int_0^pi sin^{N-2} / int_0^pi cosh(eta cos(theta)/sqrt a) sin^{N-2}
double mean_value_kernel(int N, double eta, double a, Quadrature q = {});

// Modified Bessel function of the first kind via the integral
// (r/2)^nu / (Gamma(1/2) Gamma(nu+1/2)) int_0^pi cosh(r cos t) sin^{2nu} t dt,
// evaluated as e^r * (scaled integral) for large r.
double bessel_I(double nu, double r, Quadrature q = {});
double log_bessel_I(double nu, double r, Quadrature q = {});

// Center value from the sphere mean through the Bessel route:
// (eta/(2 sqrt a))^nu * mean / (Gamma(1+nu) I_nu(eta/sqrt a)), nu = (N-2)/2.
// Dispatches to the cosh form for N = 1.
double mean_value_via_bessel(int N, double eta, double a, double mean,
                             Quadrature q = {});

// Decaying exterior comparison solution at distance `dist` from the center
// of a tangent ball of radius sqrt(a), with value beta on its boundary:
//   N = 1:   beta * exp(-dist/sqrt a)
//   N >= 2:  beta * int_0^inf exp(-dist cosh t / sqrt a) sinh^{N-2} t dt
//                 / int_0^inf exp(-cosh t) sinh^{N-2} t dt
double exterior_solution(int N, double a, double beta, double dist,
                         Quadrature q = {});
double log_exterior_solution(int N, double a, double beta, double dist,
                             Quadrature q = {});

}  // namespace sdist
