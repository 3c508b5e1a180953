#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace celef {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects built over different generator sets were combined.
class ModelMismatch : public Error {
 public:
  using Error::Error;
};

/// A degree argument is outside the admissible range.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// An operation was called with inputs violating its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold by construction failed. Usually means the
/// input does not satisfy the hypotheses of the computation.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& detail() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

enum class ValidationKind {
  NotClosed,
  RankDefect,
  NotVolume,
  NonUniqueLeeField,
  NonUniqueReeb,
  WrongDimension,
  NotProjectable,
};

std::string to_string(ValidationKind kind);

/// A candidate structure failed one of its defining conditions.
class ValidationError : public Error {
 public:
  ValidationError(ValidationKind kind, const std::string& message, int rank = -1)
      : Error(to_string(kind) + ": " + message), kind_(kind), rank_(rank) {}

  ValidationKind kind() const { return kind_; }
  /// Computed rank for RankDefect, -1 otherwise.
  int rank() const { return rank_; }

 private:
  ValidationKind kind_;
  int rank_;
};

}  // namespace celef
