#pragma once

#include <stdexcept>
#include <string>

namespace ogplab {

/// Argument outside an operation's domain (bad dimensions, p outside (0,1), ...).
class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Exhaustive search refused because the instance is larger than the allowed bound.
class CapacityError : public std::length_error {
 public:
  explicit CapacityError(const std::string& what) : std::length_error(what) {}
};

/// Operation requires a disorder family the instance does not have.
class UnsupportedDisorder : public std::invalid_argument {
 public:
  explicit UnsupportedDisorder(const std::string& what) : std::invalid_argument(what) {}
};

/// An online algorithm broke the column-at-a-time contract (e.g. returned 0).
class ContractViolation : public std::logic_error {
 public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// Covariance matrix failed the positive-definiteness check.
class NotPositiveDefinite : public std::domain_error {
 public:
  explicit NotPositiveDefinite(const std::string& what) : std::domain_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ogplab
