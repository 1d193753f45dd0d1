#pragma once

#include <stdexcept>
#include <string>

namespace hodge {

/// Base class for failures raised by the library.
class HodgeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input object violates a type invariant; the message names the invariant.
class ValidationError : public HodgeError {
 public:
  using HodgeError::HodgeError;
};

/// Malformed document text.
class ParseError : public HodgeError {
 public:
  using HodgeError::HodgeError;
};

/// A construction could not be carried out; `stage` names the failing step.
class ConstructionError : public HodgeError {
 public:
  ConstructionError(std::string stage, const std::string& what)
      : HodgeError(stage + ": " + what), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace hodge
