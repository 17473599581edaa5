#pragma once

#include <stdexcept>
#include <string>

namespace twistkit {

/// Malformed or out-of-contract input (files, CLI arguments, mismatched operands).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size bound was exceeded.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent computations disagreed, or a verified invariant failed.
/// Never recoverable: it means the library computed something wrong.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An optional feature was requested while disabled.
class FeatureDisabled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NetworkError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twistkit

namespace twistkit {

/// A realized group does not match an expected structural fingerprint.
class FingerprintError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace twistkit
