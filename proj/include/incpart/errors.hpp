#pragma once

#include <stdexcept>
#include <string>

namespace incpart {

/// Arguments outside the domain of an operation (k > n, mismatched S_{n,k}, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A binary sequence that cannot be an increment sequence (first bit must be 1).
class InvalidSequenceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A law table that is missing one or more compositions of n.
class IncompleteLawError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A verification was requested on inputs that do not satisfy its hypotheses.
class NotApplicableError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed input text (rationals, law files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace incpart
