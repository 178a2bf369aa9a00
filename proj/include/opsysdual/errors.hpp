#ifndef OPSYSDUAL_ERRORS_HPP_
#define OPSYSDUAL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace osd {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input validation (bad indices, shape disagreements, malformed files).
struct InvalidInput : Error {
  using Error::Error;
};

struct IndexOutOfRange : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct DimMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct ShapeMismatch : InvalidInput {
  using InvalidInput::InvalidInput;
};

struct InvalidBandwidth : InvalidInput {
  using InvalidInput::InvalidInput;
};

// Domain preconditions.
struct NotChordal : Error {
  using Error::Error;
};

struct NotPartiallyPositive : Error {
  using Error::Error;
};

struct NotInCone : Error {
  using Error::Error;
};

struct ZeroElement : Error {
  using Error::Error;
};

// Numerical failures.
struct NumericalError : Error {
  using Error::Error;
};

struct NoConvergence : NumericalError {
  using NumericalError::NumericalError;
};

struct VerificationFailed : NumericalError {
  using NumericalError::NumericalError;
};

}  // namespace osd

#endif  // OPSYSDUAL_ERRORS_HPP_
