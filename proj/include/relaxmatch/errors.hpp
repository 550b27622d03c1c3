#pragma once

#include <stdexcept>
#include <string>

namespace relaxmatch {

// Instance-level validation failures. The CLI maps these to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  enum class Kind {
    DuplicateId,
    DanglingEdge,
    OverlappingEdgeSets,
    NonPositiveDiscomfort,
    NonPositiveQuantity,
    MixedDemandCapacity,
  };

  ValidationError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Malformed input files or flag values. The CLI maps these to exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

// An exhaustive-enumeration routine was asked to exceed its configured cap.
// Caps are hard errors, never silent truncation. The CLI maps these to exit code 3.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& message) : std::runtime_error(message) {}
};

// Request shape does not match the operation, e.g. a many-to-one instance
// passed to the one-to-one solver entry point.
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace relaxmatch
