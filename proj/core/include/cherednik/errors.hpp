#pragma once

#include <stdexcept>
#include <string>

namespace cherednik {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero in exact arithmetic") {}
};

/// A polynomial quotient that should have been exact left a remainder.
class NotExactlyDivisible : public Error {
 public:
  using Error::Error;
};

/// z(gamma) failed to act by a scalar on an irreducible representation.
class NonScalarAction : public Error {
 public:
  using Error::Error;
};

/// A truncated computation could not certify its result.
class Uncertified : public Error {
 public:
  using Error::Error;
};

/// Integrator failure (step underflow, path touching the arrangement, ...).
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

/// Hecke parameter for which the seminormal construction has a vanishing denominator.
class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cherednik
