#pragma once

#include <stdexcept>
#include <string>

namespace adsgeo {

/// Base class for every error the library throws. The C API maps each
/// subclass to a distinct status code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Point given in the wrong chart, wrong dimension, or outside the domain.
struct ChartError : Error {
  using Error::Error;
};

/// Metric (or another matrix that must be inverted) is singular at the point.
struct DegenerateMetricError : Error {
  using Error::Error;
};

/// Requested derivative order exceeds what the object carries.
struct OrderError : Error {
  using Error::Error;
};

/// Formal series misuse: bad truncation order, composition with nonzero
/// inner constant term, reversion without invertible linear part.
struct SeriesError : Error {
  using Error::Error;
};

/// Expansion of an even-dimensional boundary past the obstruction order
/// would need log terms, which the polynomial engine does not carry.
struct EvenDimensionLogError : Error {
  using Error::Error;
};

/// Quantity that must stay away from zero got too small (e.g. the static
/// potential V near a horizon where 1/V blows up).
struct VanishingDenominatorError : Error {
  using Error::Error;
};

/// Nonlinear solve failed: recursion rank defect at an unexpected order,
/// shooting blow-up, event search failure.
struct SolveError : Error {
  using Error::Error;
};

/// Bad run configuration (unknown metric id, missing parameter, bad range).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace adsgeo
