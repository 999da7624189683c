#pragma once

#include <stdexcept>
#include <string>

namespace cosetvoa {

/// Raised when an invariant the mathematics guarantees fails at runtime.
/// Indicates a bug in this library, never bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error("internal error: " + what) {}
};

/// Raised when an enumeration would exceed its configured size guard.
class EnumerationLimit : public std::length_error {
 public:
  explicit EnumerationLimit(const std::string& what) : std::length_error(what) {}
};

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InternalError(message);
}

}  // namespace cosetvoa
