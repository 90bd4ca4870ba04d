#pragma once

#include <stdexcept>
#include <string>

namespace fplab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates the invariant of a domain type (e.g. a type vector that is
/// not strictly increasing).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A sequence that is not the first difference of the Hilbert function of a
/// reduced set of points in the plane.
class NotAnHVectorError : public Error {
 public:
  using Error::Error;
};

/// Requested operation is outside what the library computes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Internally inconsistent data, e.g. a split step whose cancelling degree is
/// absent, or a negative syzygy count.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Random generation could not produce a non-degenerate configuration within
/// its retry budget.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Rejection sampling ran out of budget.
class SamplingError : public Error {
 public:
  using Error::Error;
};

/// A condition that should be impossible for valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

[[noreturn]] void fail_internal(const std::string& what);

}  // namespace fplab
