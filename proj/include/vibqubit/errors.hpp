#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace vibq {

/// Base of every error raised by the library. The message always names the
/// violated contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidDimension : public Error {
 public:
  using Error::Error;
};

class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Population reached the guard band of the truncated Fock space.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& what,
                           double time = std::numeric_limits<double>::quiet_NaN())
      : Error(what), time_(time) {}

  /// Time sample at which the violation was detected, NaN when not time-resolved.
  double time() const { return time_; }

 private:
  double time_;
};

class UnsupportedDetuning : public Error {
 public:
  using Error::Error;
};

class ImpossibleOutcome : public Error {
 public:
  using Error::Error;
};

class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  ConfigError(const std::string& key, const std::string& what)
      : Error("config key '" + key + "': " + what), key_(key) {}

  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

}  // namespace vibq
