#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hochlift {

enum class ErrorKind {
  DomainError,
  DimensionMismatch,
  DegreeOutOfRange,
  CapacityExceeded,
  NotACocycle,
  NotASubalgebra,
  NotALift,
  NotAssociative,
  NotCentral,
  NotAMorphism,
  NotALinearLift,
  NotARingMorphism,
  CenterNotPreserved,
  NotCommutative,
  NotDiagonal,
  NotSeparable,
  MismatchedSignature,
  NotAnEndo,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Exception carrying a machine-readable kind; the CLI maps it to exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace hochlift
