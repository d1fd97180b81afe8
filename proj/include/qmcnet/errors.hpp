#pragma once

#include <stdexcept>
#include <string>

namespace qmcnet {

// Input outside the mathematical domain of an operation (zero inverse,
// index out of range, wrong base).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Construction parameters violate a family's requirements.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or exact computation would exceed its configured cap.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Digits would be lost because the requested precision is too small, or
// an exact representation does not fit the 64-bit storage.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A construction produced output that violates a property it guarantees.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qmcnet
