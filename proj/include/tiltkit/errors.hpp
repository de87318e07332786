#pragma once

#include <stdexcept>
#include <string>

namespace tiltkit {

// Violations of a mathematical precondition (singular Cartan, leaf edge, ...).
// The CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input. The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DimensionError : public InputError {
 public:
  using InputError::InputError;
};

class SingularMatrixError : public DomainError {
 public:
  using DomainError::DomainError;
};

class LeafEdgeError : public DomainError {
 public:
  using DomainError::DomainError;
};

class InfiniteDimensionalError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NotPositiveDefiniteError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace tiltkit
