#pragma once

#include <stdexcept>
#include <string>

namespace cpx {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that does not describe a valid complex or cochain.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A dimension argument outside the range supported by the complex.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A normalized operator was requested but some simplex has zero degree.
class DegenerateDegree : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size limit.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::string limit_name, double limit)
      : Error(what), limit_name_(std::move(limit_name)), limit_(limit) {}

  const std::string& limit_name() const noexcept { return limit_name_; }
  double limit() const noexcept { return limit_; }

 private:
  std::string limit_name_;
  double limit_;
};

/// Non-finite or otherwise unusable floating point input.
class NumericInput : public Error {
 public:
  using Error::Error;
};

/// A mathematical hypothesis of an operation does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpx
