#pragma once

#include <stdexcept>
#include <string>

namespace ranstrat {

/// Input that violates a documented invariant (bad indices, duplicate points,
/// negative radius, malformed files).
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A brute-force routine was asked to run above its configured size cap.
class CapExceeded : public std::length_error {
 public:
  explicit CapExceeded(const std::string& what) : std::length_error(what) {}
};

/// An operation's precondition does not hold for otherwise valid inputs,
/// e.g. a perturbation outside the safe ball or a non-constant path stretch.
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace ranstrat
