#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace breather {

// Adaptive step control could not satisfy its tolerance contract.
struct StepSizeUnderflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No orbit return found within the search horizon (signals a solver bug).
struct NoReturnDetected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct FitUnstable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::size_t byte_offset, const std::string& message)
      : std::runtime_error(message + " (byte " + std::to_string(byte_offset) + ")"),
        offset(byte_offset) {}
};

struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonPositiveCoefficient : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace breather
