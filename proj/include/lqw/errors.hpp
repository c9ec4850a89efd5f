#pragma once

#include <stdexcept>
#include <string>

namespace lqw {

// Invalid sizes, out-of-range parameters and malformed user input.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula was evaluated outside the region where it is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A perturbative model is inconsistent (non-unitary leading order,
// singular eigenvector basis).
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numerical invariant (norm conservation, model agreement) failed.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed CSV input. The message carries "file:line: reason".
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lqw
