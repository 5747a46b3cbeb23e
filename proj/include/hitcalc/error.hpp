#pragma once

#include <stdexcept>
#include <string>

namespace hitcalc {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: mismatched variable counts, out-of-range indices,
/// non-homogeneous polynomials, weight vectors of the wrong degree.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured column or memory cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// A cache file failed validation.
class CorruptCache : public Error {
 public:
  using Error::Error;
};

/// A substitution raised the weight of a term inside a weight-filtered
/// quotient. Never expected for the group generators.
class FiltrationViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hitcalc
