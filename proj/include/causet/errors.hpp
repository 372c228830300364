#pragma once

#include <stdexcept>
#include <string>

namespace causet {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A point lies outside the chart domain of a model.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested operation is not supported by this model or size.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

// No analytic path and no Monte Carlo budget.
class EstimationError : public Error {
 public:
  using Error::Error;
};

// Sampled points violate antisymmetry (coincident points).
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Malformed configuration; the message carries line/field diagnostics.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace causet
