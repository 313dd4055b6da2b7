#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace omega {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
 public:
  explicit FieldMismatch(const std::string& detail)
      : Error("field mismatch: " + detail) {}
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class DuplicateOffset : public Error {
 public:
  explicit DuplicateOffset(std::size_t offset)
      : Error("duplicate stencil offset " + std::to_string(offset)) {}
};

class GeneratorFailure : public Error {
 public:
  GeneratorFailure(std::size_t row, const std::string& what)
      : Error("generator failed at row " + std::to_string(row) + ": " + what) {}
};

class PivotCollision : public Error {
 public:
  explicit PivotCollision(std::size_t column)
      : Error("pivot column " + std::to_string(column) + " already in use") {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::size_t index, std::size_t bound)
      : Error("index " + std::to_string(index) + " out of range (limit " +
              std::to_string(bound) + ")") {}
};

/// A pivot observed at `stage` landed in `column`, below the promised floor.
class CertificateViolation : public Error {
 public:
  CertificateViolation(std::size_t stage, std::size_t column, std::size_t bound)
      : Error("pivot-floor violated at stage " + std::to_string(stage) +
              ": pivot column " + std::to_string(column) + " < promised " +
              std::to_string(bound)),
        stage_(stage),
        column_(column),
        bound_(bound) {}

  std::size_t stage() const noexcept { return stage_; }
  std::size_t column() const noexcept { return column_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t stage_;
  std::size_t column_;
  std::size_t bound_;
};

class DuplicateLength : public Error {
 public:
  explicit DuplicateLength(std::size_t column)
      : Error("two nonzero rows share row-length " + std::to_string(column)) {}
};

class NonIncreasingLengths : public Error {
 public:
  explicit NonIncreasingLengths(std::size_t position)
      : Error("representative " + std::to_string(position) +
              " does not increase the row-length") {}
};

class NotReduced : public Error {
 public:
  NotReduced() : Error("rows are in neither LRRF nor LREF") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace omega
