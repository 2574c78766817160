#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace erasurelab {

enum class ErrorKind {
  NotPrimePower,
  DivisionByZero,
  ZeroElement,
  FieldMismatch,
  InvalidPolynomial,
  SingularBlock,
  DependentColumns,
  DimensionMismatch,
  InconsistentSyndrome,
  DivisibilityViolation,
  LengthTooSmall,
  BadFieldOverride,
  BadParameters,
  NotCyclic,
  BadReciprocal,
  TooLarge,
  LengthMismatch,
  Unrecoverable,
  NotSystematic,
  UnsupportedDelay,
  ParameterViolation,
  BadProbability,
  StructureViolation,
  OutOfScope,
  WrongProvenance,
  BadFormat,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can report it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace erasurelab
