#pragma once

#include <stdexcept>
#include <string>

namespace floer {

/// Malformed input document (bad JSON shape, decimal coordinates, unknown mode).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input is well formed but violates a mathematical precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant failed (square-zero, grading consistency, ...).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Power-series truncation never stabilized below the configured cap.
class TruncationError : public InternalError {
 public:
  using InternalError::InternalError;
};

}  // namespace floer
