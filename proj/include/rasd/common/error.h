// Copyright 2026 rASD Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#ifndef RASD_COMMON_ERROR_H_
#define RASD_COMMON_ERROR_H_

#include <stdexcept>
#include <string>

namespace rasd {

// Bad arguments to an operation (shape mismatch, empty input, out-of-range
// label, ...).
class InvalidInputError : public std::runtime_error {
 public:
  explicit InvalidInputError(const std::string& msg)
      : std::runtime_error(msg) {}
};

// Bad configuration: unknown keys, unsupported values, missing classes.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Missing or malformed data on disk (manifests, wav files, checkpoints).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numerical failure (non-finite loss, degenerate normalization, ...).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

// A verification harness (grad check, metric guard) detected a violation.
class VerificationError : public std::runtime_error {
 public:
  explicit VerificationError(const std::string& msg)
      : std::runtime_error(msg) {}
};

#define RASD_CHECK(cond, ExType, msg)            \
  do {                                           \
    if (!(cond)) throw ExType(std::string(msg)); \
  } while (0)

}  // namespace rasd

#endif  // RASD_COMMON_ERROR_H_
