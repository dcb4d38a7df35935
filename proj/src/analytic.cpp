#include "sdist/analytic.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace sdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Lanczos, g = 7, 9 coefficients.
const double kLanczos[9] = {0.99999999999980993,
                            676.5203681218851,
                            -1259.1392167224028,
                            771.32342877765313,
                            -176.61502916214059,
                            12.507343278686905,
                            -0.13857109526572012,
                            9.9843695780195716e-6,
                            1.5056327351493116e-7};

double lanczos_log_gamma(double x) {
  // Valid for x > 0 (no reflection needed here).
  const double g = 7.0;
  double acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0 + i);
  const double t = x - 0.5 + g;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t +
         std::log(acc);
}

double pow_or_one(double base, double zeta) {
  return zeta == 0.0 ? 1.0 : std::pow(base, zeta);
}

}  // namespace

double log_gamma_fn(double x) {
  if (!(x > 0.0)) throw ConfigError("gamma function needs a positive argument");
  return lanczos_log_gamma(x);
}

double gamma_fn(double x) { return std::exp(log_gamma_fn(x)); }

double log_cosh(double t) {
  t = std::abs(t);
  return t - std::numbers::ln2 + std::log1p(std::exp(-2.0 * t));
}

double log_sum_exp(double a, double b) {
  if (a == -kInf) return b;
  if (b == -kInf) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

double varadhan_1d(double x, double h, double a) {
  if (!(a > 0.0) || !(h > 0.0) || std::abs(x) > h)
    throw ConfigError("varadhan_1d needs |x| <= h and a, h > 0");
  const double c = 1.0 / std::sqrt(a);
  const double ax = std::abs(x);
  return std::exp((ax - h) * c) * (1.0 + std::exp(-2.0 * ax * c)) /
         (1.0 + std::exp(-2.0 * h * c));
}

Example1d::Example1d(double h, double k, double alpha, double zeta, double a,
                     Quadrature q)
    : h_(h), k_(k), alpha_(alpha), zeta_(zeta), a_(a), q_(q) {
  q_.validate();
  if (!(0.0 < k && k < h)) throw ConfigError("need 0 < k < h");
  if (!(a > 0.0)) throw ConfigError("need a > 0");
  if (!(alpha >= 0.0)) throw ConfigError("need alpha >= 0");
  if (!(zeta >= 0.0)) throw ConfigError("need zeta >= 0");
  c_ = 1.0 / std::sqrt(a_);
  t_h_ = (h_ - k_) * c_;
  glow_h_ = lower_gamma(t_h_);
  e_h_ = e_term(t_h_);
  // J(h) = a^{zeta/2} e^{T_h} (glow - E)/2 -- the source integral against
  // the decaying homogeneous solution, with e^{T_h} kept symbolic.
  log_j_h_ = t_h_ + 0.5 * zeta_ * std::log(a_) - std::numbers::ln2 +
             std::log(glow_h_ - e_h_);
  const double log_alpha =
      alpha_ > 0.0 ? std::log(alpha_) : -kInf;
  log_gamma_ = log_sum_exp(log_alpha, log_j_h_) - log_cosh(h_ * c_);
}

double Example1d::lower_gamma(double T) const {
  // int_0^T s^zeta e^{-s} ds, integrand negligible past the cap.
  const double cap = std::min(T, q_.truncation + 10.0 * (1.0 + zeta_));
  if (cap <= 0.0) return 0.0;
  const double tail = pow_or_one(cap, zeta_) * std::exp(-cap);
  if (cap < T && tail > 1e-16 * gamma_fn(1.0 + zeta_))
    throw QuadratureTolExceeded("truncation too small for the gamma integral");
  return simpson([&](double s) { return pow_or_one(s, zeta_) * std::exp(-s); },
                 0.0, cap, q_.panels);
}

double Example1d::e_term(double T) const {
  // e^{-T} int_0^T (T-w)^zeta e^{-w} dw; underflow of the prefactor is fine.
  if (T <= 0.0) return 0.0;
  const double cap = std::min(T, q_.truncation + 10.0 * (1.0 + zeta_));
  const double integral =
      simpson([&](double w) { return pow_or_one(T - w, zeta_) * std::exp(-w); },
              0.0, cap, q_.panels);
  return std::exp(-T) * integral;
}

double Example1d::gamma_coeff() const { return std::exp(log_gamma_); }

double Example1d::source(double x) const {
  const double t = std::abs(x) - k_;
  return t <= 0.0 ? 0.0 : pow_or_one(t, zeta_);
}

double Example1d::log_value(double x) const {
  const double ax = std::abs(x);
  if (ax > h_) throw ConfigError("evaluation point outside the domain");
  if (ax <= k_) return log_gamma_ + log_cosh(ax * c_);

  // On (k, h]: u = gamma cosh(x c) - J(x). Both terms carry e^{x c}; after
  // factoring a^{zeta/2} e^{(x-k) c} the bracket becomes
  //   rho*A0 + rho*dgamma + (rho-1)*glow_x + (E_x - rho*E_h),
  // rho = (1+e^{-2xc})/(1+e^{-2hc}), A0 = 2 alpha a^{-zeta/2} e^{-T_h},
  // dgamma = int_{T_x}^{T_h} s^zeta e^{-s} ds. Every addend is small and
  // nonnegative except the last, which stays below the total.
  const double t_x = (ax - k_) * c_;
  const double ex_x = std::exp(-2.0 * ax * c_);
  const double ex_h = std::exp(-2.0 * h_ * c_);
  const double rho = (1.0 + ex_x) / (1.0 + ex_h);
  const double glow_x = lower_gamma(t_x);
  const double e_x = e_term(t_x);

  // dgamma on [T_x, T_h], computed forward from T_x to keep it positive.
  const double dt = t_h_ - t_x;
  double dgamma = 0.0;
  if (dt > 0.0) {
    const double cap = std::min(dt, q_.truncation + 10.0 * (1.0 + zeta_));
    const double pre = std::exp(-t_x);
    if (pre > 0.0)
      dgamma = pre * simpson(
                         [&](double w) {
                           return pow_or_one(t_x + w, zeta_) * std::exp(-w);
                         },
                         0.0, cap, q_.panels);
  }

  const double log_a0 =
      alpha_ > 0.0 ? std::numbers::ln2 + std::log(alpha_) -
                         0.5 * zeta_ * std::log(a_) - t_h_
                   : -kInf;

  // Assemble in log-space so that tiny brackets at small a stay exact.
  const double l1 = log_a0 == -kInf ? -kInf : std::log(rho) + log_a0;
  const double l2 = dgamma > 0.0 ? std::log(rho) + std::log(dgamma) : -kInf;
  const double l3 = (rho > 1.0 && glow_x > 0.0)
                        ? std::log(rho - 1.0) + std::log(glow_x)
                        : -kInf;
  double lpos = log_sum_exp(log_sum_exp(l1, l2), l3);
  if (e_x > 0.0) lpos = log_sum_exp(lpos, std::log(e_x));
  const double lneg = e_h_ > 0.0 ? std::log(rho) + std::log(e_h_) : -kInf;

  double log_bracket;
  if (lneg == -kInf) {
    log_bracket = lpos;
  } else {
    const double ratio = std::exp(lneg - lpos);
    if (ratio >= 1.0) {
      // u(h) = 0 with alpha = 0; treat exact zero, guard anything else.
      if (alpha_ == 0.0 && ax == h_) return -kInf;
      throw LossOfPrecision("bracket cancellation in the closed form");
    }
    if (1.0 - ratio < 1e-8)
      throw LossOfPrecision("more than 8 digits lost in the closed form");
    log_bracket = lpos + std::log1p(-ratio);
  }

  return ax * c_ + 0.5 * zeta_ * std::log(a_) - k_ * c_ - std::numbers::ln2 +
         log_bracket;
}

double Example1d::value(double x) const { return std::exp(log_value(x)); }

double gamma_a(double h, double k, double alpha, double zeta, double a,
               Quadrature q) {
  return Example1d(h, k, alpha, zeta, a, q).gamma_coeff();
}

double example1d_solution(double x, double h, double k, double alpha,
                          double zeta, double a, Quadrature q) {
  return Example1d(h, k, alpha, zeta, a, q).value(x);
}

namespace {

// int_0^pi exp(-r (1 -+ cos t)) sin^p t dt summed for both signs: the
// cosh integral scaled by e^{-r}.
double scaled_cosh_integral(double r, int p, const Quadrature& q) {
  return simpson(
      [&](double th) {
        const double s = std::sin(th);
        const double sp = p == 0 ? 1.0 : (p == 1 ? s : std::pow(s, p));
        const double c = std::cos(th);
        return 0.5 * (std::exp(r * (c - 1.0)) + std::exp(-r * (c + 1.0))) * sp;
      },
      0.0, std::numbers::pi, q.panels);
}

double sin_power_integral(int p, const Quadrature& q) {
  return simpson(
      [&](double th) {
        const double s = std::sin(th);
        return p == 0 ? 1.0 : (p == 1 ? s : std::pow(s, p));
      },
      0.0, std::numbers::pi, q.panels);
}

}  // namespace

double mean_value_kernel(int N, double eta, double a, Quadrature q) {
  q.validate();
  if (N < 1) throw ConfigError("dimension must be >= 1");
  if (!(eta > 0.0) || !(a > 0.0)) throw ConfigError("need eta, a > 0");
  const double r = eta / std::sqrt(a);
  if (N == 1) return std::exp(-log_cosh(r));
  const double num = sin_power_integral(N - 2, q);
  const double den = scaled_cosh_integral(r, N - 2, q);
  return std::exp(-r) * num / den;
}

double log_bessel_I(double nu, double r, Quadrature q) {
  q.validate();
  if (!(nu >= 0.0) || !(r >= 0.0)) throw ConfigError("need nu >= 0, r >= 0");
  if (r == 0.0) return nu == 0.0 ? 0.0 : -kInf;
  const int p2 = static_cast<int>(std::lround(2.0 * nu));
  const bool int_power = std::abs(2.0 * nu - p2) < 1e-14;
  auto sin_pow = [&](double s) {
    if (int_power) return p2 == 0 ? 1.0 : (p2 == 1 ? s : std::pow(s, p2));
    return std::pow(s, 2.0 * nu);
  };
  const double scaled = simpson(
      [&](double th) {
        const double s = std::sin(th);
        const double c = std::cos(th);
        return 0.5 * (std::exp(r * (c - 1.0)) + std::exp(-r * (c + 1.0))) *
               sin_pow(s);
      },
      0.0, std::numbers::pi, q.panels);
  return nu * std::log(0.5 * r) + r + std::log(scaled) -
         log_gamma_fn(0.5) - log_gamma_fn(nu + 0.5);
}

double bessel_I(double nu, double r, Quadrature q) {
  if (r == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return std::exp(log_bessel_I(nu, r, q));
}

double mean_value_via_bessel(int N, double eta, double a, double mean,
                             Quadrature q) {
  q.validate();
  if (N < 1) throw ConfigError("dimension must be >= 1");
  if (!(eta > 0.0) || !(a > 0.0)) throw ConfigError("need eta, a > 0");
  const double r = eta / std::sqrt(a);
  if (N == 1) return mean * std::exp(-log_cosh(r));
  const double nu = 0.5 * (N - 2);
  const double log_kernel = nu * std::log(0.5 * r) - log_gamma_fn(1.0 + nu) -
                            log_bessel_I(nu, r, q);
  return mean * std::exp(log_kernel);
}

namespace {

// log of int_0^inf exp(-lambda cosh t) sinh^p t dt, lambda >= ~1.
double log_exterior_integral(double lambda, int p, const Quadrature& q) {
  // Truncate where lambda (cosh t - 1) reaches 45: tail below 1e-19 of peak.
  const double arg = 1.0 + 45.0 / lambda;
  const double tmax = std::acosh(arg);
  const double scaled = simpson(
      [&](double t) {
        const double sh = std::sinh(t);
        const double sp = p == 0 ? 1.0 : (p == 1 ? sh : std::pow(sh, p));
        return std::exp(-lambda * (std::cosh(t) - 1.0)) * sp;
      },
      0.0, tmax, q.panels);
  if (!(scaled > 0.0))
    throw QuadratureTolExceeded("exterior integral lost all mass");
  return -lambda + std::log(scaled);
}

}  // namespace

double log_exterior_solution(int N, double a, double beta, double dist,
                             Quadrature q) {
  q.validate();
  if (N < 1) throw ConfigError("dimension must be >= 1");
  if (!(a > 0.0) || !(beta > 0.0)) throw ConfigError("need a, beta > 0");
  const double sqa = std::sqrt(a);
  if (dist < sqa)
    throw ConfigError("exterior solution defined for dist >= sqrt(a)");
  if (N == 1) return std::log(beta) - dist / sqa;
  const double lambda = dist / sqa;
  return std::log(beta) + log_exterior_integral(lambda, N - 2, q) -
         log_exterior_integral(1.0, N - 2, q);
}

double exterior_solution(int N, double a, double beta, double dist,
                         Quadrature q) {
  return std::exp(log_exterior_solution(N, a, beta, dist, q));
}

}  // namespace sdist
