#pragma once

#include <stdexcept>
#include <string>

namespace squint {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad call: dimension mismatch, out-of-range order, unknown preset, malformed input.
class ArgumentError : public Error {
public:
  using Error::Error;
};

/// A physical or structural invariant failed (asymmetric blocks, unphysical covariance).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// A schedule or formula hit a singular point, e.g. a(t) = 0.
class SingularityError : public Error {
public:
  using Error::Error;
};

/// A matrix that must be invertible is numerically singular.
class NumericError : public Error {
public:
  using Error::Error;
};

/// The integrator drifted past its divergence threshold (step too large).
class DivergenceError : public Error {
public:
  using Error::Error;
};

}  // namespace squint
