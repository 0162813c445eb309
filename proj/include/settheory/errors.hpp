#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace settheory {

// Root of every error thrown by the kernel.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A materialization would exceed the configured element budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// An argument is outside the operation's domain (division by zero, a > b in
// left subtraction, malformed encodings, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller broke a documented precondition (unordered option sets, a map whose
// domain does not match, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotWellFoundedError : public Error {
 public:
  using Error::Error;
};

// Raised by order_type. `axiom` names the first violated property and
// `witness` lists the node names involved.
class NotWellOrderError : public Error {
 public:
  NotWellOrderError(std::string axiom, std::vector<std::string> witness);

  const std::string& axiom() const noexcept { return axiom_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::string> witness_;
};

class NotInjectiveError : public Error {
 public:
  using Error::Error;
};

// Parse failure with a 1-based source position and the set of tokens that
// would have been accepted.
class SyntaxError : public Error {
 public:
  SyntaxError(std::string message, int line, int column, std::vector<std::string> expected = {});

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// Ordinal and rational sorts were mixed, or an operator was applied to a sort
// that does not support it.
class SortError : public Error {
 public:
  using Error::Error;
};

}  // namespace settheory
