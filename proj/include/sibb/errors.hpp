#pragma once

#include <stdexcept>
#include <string>

namespace sibb {

// Error taxonomy mirrored by the CLI exit codes: config -> 2, data -> 3,
// numerical/generation -> 4.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class DataError : public std::runtime_error {
public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

class GenerationError : public NumericalError {
public:
  explicit GenerationError(const std::string& msg) : NumericalError(msg) {}
};

}  // namespace sibb
