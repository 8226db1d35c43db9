#pragma once

#include <stdexcept>
#include <string>

namespace arrangeo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands have incompatible shapes (non-square determinant, mismatched sizes).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A linear system that must have a unique solution does not.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A family of vectors that must be independent is not.
class RankError : public Error {
 public:
  using Error::Error;
};

/// Points or hyperplanes violate a geometric precondition.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// A domain object fails general position or maximal independence.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An offset vector sits on a concurrency hyperplane.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds a documented size guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace arrangeo
