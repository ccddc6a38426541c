#pragma once

#include <stdexcept>
#include <string>

namespace aiimpact {

// Bad input data or configuration: maps to CLI exit code 1.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

// Failure while evaluating the model itself: maps to CLI exit code 2.
class ComputationError : public std::runtime_error {
  public:
    explicit ComputationError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace aiimpact
