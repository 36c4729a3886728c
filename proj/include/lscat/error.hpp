#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lscat {

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: a relation with a cycle, duplicate labels, an unknown
/// point name, a bad JSON field. `field` names the offending location when
/// known (e.g. "order[2][1]").
class InputError : public Error {
 public:
  InputError(const std::string& message, std::string field = {})
      : Error(message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Syntactically invalid JSON, with the 1-based position of the problem.
class ParseError : public InputError {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(message), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Operation needs the empty set to be handled by the caller.
class EmptySubsetError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive computation would exceed its configured bound.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

/// The homotopy search hit its state cap before reaching a verdict.
class UndecidedError : public Error {
 public:
  using Error::Error;
};

}  // namespace lscat
