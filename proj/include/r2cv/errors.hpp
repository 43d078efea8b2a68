#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace r2cv {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer than two values where the leave-one-out formulas divide by n - 1.
class SeriesTooShort : public Error {
 public:
  using Error::Error;
};

/// NaN or infinity in a numeric input.
class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

/// Paired sequences (targets vs predictions, feature rows vs targets)
/// differ in length.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

/// All targets are equal: the score denominators vanish and every R^2
/// variant is undefined.
class ZeroVarianceTargets : public Error {
 public:
  using Error::Error;
};

/// A predictor was asked to fit on an empty training set.
class EmptyTrainingSet : public Error {
 public:
  using Error::Error;
};

/// Predictor or experiment configuration invalid for the data at hand
/// (e.g. k >= n, negative ridge, zero trials).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// The linear predictor's normal equations are singular and ridge is zero.
class SingularFit : public Error {
 public:
  using Error::Error;
};

/// CSV input could not be read or parsed. line() is 1-based; 0 means the
/// problem is not tied to a specific line.
class CsvError : public Error {
 public:
  explicit CsvError(const std::string& message, std::size_t line = 0)
      : Error(message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A referenced column does not exist in the parsed table.
class MissingColumn : public CsvError {
 public:
  using CsvError::CsvError;
};

}  // namespace r2cv
