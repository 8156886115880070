#pragma once

#include <stdexcept>
#include <string>

namespace cellkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported Cartan type / rank combination or other bad configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller misuse: malformed element words, mixed systems, basis mismatch.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A well-formed request whose mathematical result is undefined
/// (projective dimension of a zero module, out-of-domain coset representative).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Disk cache is missing, corrupt or was written for a different configuration.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace cellkit
