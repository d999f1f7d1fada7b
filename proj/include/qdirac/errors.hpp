#pragma once

#include <stdexcept>

namespace qdirac {

/// A four-momentum that misses its mass shell.
class OffShellError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A constructed object failed its own residual check. Always a convention
/// or sign bug, never bad user input.
class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent configuration; the message names the field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qdirac
