#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dnacode {

/// A parameter lies outside the domain of the requested operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A redundancy was requested for an empty constrained set (log of zero).
class UndefinedRedundancy : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An iterative numeric procedure did not meet its tolerance.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A code cannot be built for the requested parameters.
class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Strand text that is not over the ACGT alphabet.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  /// Zero-based character offset of the offending input.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A received word violates the code: not a codeword, wrong length, or a
/// run/balance constraint is broken.
class ConstraintViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force enumeration refused because the search space exceeds its cap.
class SearchSpaceTooLarge : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace dnacode
