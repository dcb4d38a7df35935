#pragma once

#include <stdexcept>
#include <string>

namespace sdist {

// Base type for every failure this library raises on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration or violated type invariant.
struct ConfigError : Error {
  using Error::Error;
};

// Grid spacing exceeds the boundary-layer resolution rule (spacing > sqrt(a)/4).
struct GridTooCoarse : Error {
  using Error::Error;
};

// Grid too coarse to resolve the interface of the zero set.
struct EmptyInterface : Error {
  using Error::Error;
};

struct BallOutsideGrid : Error {
  using Error::Error;
};

struct BallUnresolved : Error {
  using Error::Error;
};

struct SphereOutsideGrid : Error {
  using Error::Error;
};

struct NoConvergence : Error {
  int iterations;
  double residual;
  NoConvergence(int it, double res)
      : Error("iterative solve did not converge: " + std::to_string(it) +
              " iterations, relative residual " + std::to_string(res)),
        iterations(it),
        residual(res) {}
};

struct NonPositiveSolution : Error {
  using Error::Error;
};

struct BranchDomainViolation : Error {
  using Error::Error;
};

struct EmptyRegion : Error {
  using Error::Error;
};

struct QuadratureTolExceeded : Error {
  using Error::Error;
};

struct LossOfPrecision : Error {
  using Error::Error;
};

struct InsufficientRows : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace sdist
