#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperpde {

enum class ErrorCode {
  DivisionByZero,
  ParseError,
  ShapeError,
  DimTooLarge,
  FieldViolation,
  NotCommutative,
  NotAssociative,
  UnitViolation,
  AlgebraMismatch,
  FieldMismatch,
  NonMonic,
  FirstNotUnit,
  LinearlyDependent,
  NotInSubspace,
  ArityMismatch,
  VarOutOfRange,
  NotHomogeneous,
  ZeroOperator,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

/// Base of every exception thrown by the library. `witness()` carries the
/// first offending index triple for the algebra axiom errors and is zero
/// otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, std::array<std::size_t, 3> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what), witness_(witness) {}

  ErrorCode code() const noexcept { return code_; }
  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
  std::array<std::size_t, 3> witness_;
};

}  // namespace hyperpde
