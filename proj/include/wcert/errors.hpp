#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wcert {

enum class ErrorCode {
  Syntax,
  UnknownIdentifier,
  Domain,
  MixedDomain,
  NotMonotone,
  OutOfRange,
  Convergence,
  Precondition,
  UnknownName,
  InvalidArgument,
  Internal,
};

/// Base class of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// Parse failure. `column` is 1-based; `expected` describes the token set
/// the parser would have accepted at that position.
class SyntaxError : public Error {
public:
  SyntaxError(std::size_t column, std::string expected, const std::string& msg)
      : Error(ErrorCode::Syntax, msg), column_(column), expected_(std::move(expected)) {}
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t column_;
  std::string expected_;
};

class UnknownIdentifierError : public Error {
public:
  UnknownIdentifierError(std::size_t column, std::string name, const std::string& msg)
      : Error(ErrorCode::UnknownIdentifier, msg), column_(column), name_(std::move(name)) {}
  std::size_t column() const { return column_; }
  const std::string& name() const { return name_; }

private:
  std::size_t column_;
  std::string name_;
};

/// Evaluation outside the natural domain of some operation (ln of a
/// non-positive argument, division by an interval containing zero, ...).
/// Carries the operation name and the offending argument.
class DomainError : public Error {
public:
  DomainError(std::string op, double value, const std::string& msg)
      : Error(ErrorCode::Domain, msg), op_(std::move(op)), lo_(value), hi_(value) {}
  DomainError(std::string op, double lo, double hi, const std::string& msg)
      : Error(ErrorCode::Domain, msg), op_(std::move(op)), lo_(lo), hi_(hi) {}
  const std::string& op() const { return op_; }
  double value_lo() const { return lo_; }
  double value_hi() const { return hi_; }

private:
  std::string op_;
  double lo_;
  double hi_;
};

}  // namespace wcert
