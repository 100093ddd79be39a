#pragma once

#include <stdexcept>
#include <string>

namespace ratio_bounds {

/// Base of every error raised by the library. The message carries the
/// violated predicate so the CLI can echo it verbatim.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// (n, x) outside a coefficient system's domain, unknown family, bad depth.
class DomainError : public Error {
 public:
  using Error::Error;
};

// d*e < 0 with eta^2 < 1: the Riccati quadratic has no real roots.
class ComplexRootsError : public Error {
 public:
  using Error::Error;
};

// The bound requested needs the d > 0, e > 0 regime.
class RegimeError : public Error {
 public:
  using Error::Error;
};

// A family's certified hypothesis does not cover the requested point.
class ValidityError : public Error {
 public:
  using Error::Error;
};

// Minimal/dominant classification incompatible with the requested bound.
class ClassError : public Error {
 public:
  using Error::Error;
};

class MonotonicityError : public Error {
 public:
  using Error::Error;
};

// lower > upper: signals a bug in a family descriptor.
class InconsistentBoundsError : public Error {
 public:
  using Error::Error;
};

// A recurrence step left the sign-consistent region.
class DenominatorSignError : public Error {
 public:
  using Error::Error;
};

class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

// A zero-bound positivity condition failed.
class ConditionFailedError : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  using Error::Error;
};

}  // namespace ratio_bounds
