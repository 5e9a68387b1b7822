#pragma once

#include <stdexcept>
#include <string>

namespace polarsim {

/// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Total intensity is zero or negative where a positive one is required
/// (normalization, Stokes reconstruction).
struct DegenerateIntensityError : Error {
  using Error::Error;
};

/// Polarized part of a Stokes vector is too small to define a direction.
struct DegeneratePolarizationError : Error {
  using Error::Error;
};

/// Voltage or retardance outside the calibrated range of an LC device.
struct CalibrationRangeError : Error {
  using Error::Error;
};

/// Too few intensity samples for the requested analysis.
struct InsufficientSamplesError : Error {
  using Error::Error;
};

/// Antipodal states: the corrective rotation axis is not unique.
struct AmbiguousAxisError : Error {
  using Error::Error;
};

/// An operation that requires normalized Stokes input received an
/// unnormalized one.
struct NotNormalizedError : Error {
  using Error::Error;
};

/// Invalid configuration (bad file, bad value, inconsistent settings).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace polarsim
