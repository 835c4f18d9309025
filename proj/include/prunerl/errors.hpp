#pragma once

#include <stdexcept>
#include <string>

namespace prunerl {

// Error taxonomy used across the library. The CLI maps these to distinct
// exit codes.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

class TransportError : public std::runtime_error {
public:
  explicit TransportError(const std::string& msg) : std::runtime_error(msg) {}
};

class TrainingError : public std::runtime_error {
public:
  explicit TrainingError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace prunerl
