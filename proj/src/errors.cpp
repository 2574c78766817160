#include "erasurelab/errors.hpp"

namespace erasurelab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::SingularBlock: return "SingularBlock";
    case ErrorKind::DependentColumns: return "DependentColumns";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InconsistentSyndrome: return "InconsistentSyndrome";
    case ErrorKind::DivisibilityViolation: return "DivisibilityViolation";
    case ErrorKind::LengthTooSmall: return "LengthTooSmall";
    case ErrorKind::BadFieldOverride: return "BadFieldOverride";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::NotCyclic: return "NotCyclic";
    case ErrorKind::BadReciprocal: return "BadReciprocal";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Unrecoverable: return "Unrecoverable";
    case ErrorKind::NotSystematic: return "NotSystematic";
    case ErrorKind::UnsupportedDelay: return "UnsupportedDelay";
    case ErrorKind::ParameterViolation: return "ParameterViolation";
    case ErrorKind::BadProbability: return "BadProbability";
    case ErrorKind::StructureViolation: return "StructureViolation";
    case ErrorKind::OutOfScope: return "OutOfScope";
    case ErrorKind::WrongProvenance: return "WrongProvenance";
    case ErrorKind::BadFormat: return "BadFormat";
  }
  return "Unknown";
}

void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, std::string(to_string(kind)) + ": " + what);
}

}  // namespace erasurelab
