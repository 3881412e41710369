#pragma once

#include <stdexcept>
#include <string>

namespace wexp {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed root datum, unknown preset, bad CLI flags.
struct ConfigError : Error {
  using Error::Error;
};

// A checked mathematical invariant failed. Never a valid state.
struct InvariantViolation : Error {
  using Error::Error;
};

struct InterpolationError : Error {
  using Error::Error;
};

struct Inconsistent : InterpolationError {
  using InterpolationError::InterpolationError;
};

struct NonIntegral : InterpolationError {
  using InterpolationError::InterpolationError;
};

struct NormalizationFailure : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

struct RankOneViolated : InvariantViolation {
  using InvariantViolation::InvariantViolation;
};

struct WindowTooSmall : Error {
  using Error::Error;
};

struct WindowTooLarge : Error {
  using Error::Error;
};

struct SupportEscapesWindow : Error {
  using Error::Error;
};

}  // namespace wexp
