#ifndef JACRED_ERROR_HPP
#define JACRED_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace jacred {

/// Broad failure categories; the CLI maps each one to an exit code.
enum class ErrorKind {
  input,         ///< malformed or inconsistent caller data
  precondition,  ///< a mathematical hypothesis of the operation is not met
  internal,      ///< an invariant the library guarantees was violated
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(ErrorKind::input, what) {}
};

/// Syntax error in a polynomial expression. Line and column are 1-based.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : InputError("parse error at " + std::to_string(line) + ":" +
                   std::to_string(column) + ": " + msg),
        line_(line),
        column_(column),
        message_(msg) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// JSON document does not match the expected layout; `pointer` is an RFC 6901 path.
class SchemaError : public InputError {
 public:
  SchemaError(std::string pointer, const std::string& msg)
      : InputError("schema violation at '" + pointer + "': " + msg),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::precondition, what) {}
};

class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what) : Error(ErrorKind::internal, what) {}
};

}  // namespace jacred

#endif  // JACRED_ERROR_HPP
