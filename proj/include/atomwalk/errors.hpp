#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace atomwalk {

/// A physical precondition was violated (non-positive mass, negative time, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The momentum grid cuts off more of the initial Gaussian than allowed.
class CoverageError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Block with Omega = delta = 0, where the dressed-state coefficients are undefined.
class DegenerateBlockError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Invalid integrator settings or step budget exceeded.
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed catalog text. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Catalog contents violate an invariant (duplicate name, non-positive mass, ...).
/// line() is 0 when the error did not come from parsed text.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace atomwalk
