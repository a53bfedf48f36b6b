#include "hochlift/error.hpp"

namespace hochlift {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorKind::CapacityExceeded: return "CapacityExceeded";
    case ErrorKind::NotACocycle: return "NotACocycle";
    case ErrorKind::NotASubalgebra: return "NotASubalgebra";
    case ErrorKind::NotALift: return "NotALift";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::NotAMorphism: return "NotAMorphism";
    case ErrorKind::NotALinearLift: return "NotALinearLift";
    case ErrorKind::NotARingMorphism: return "NotARingMorphism";
    case ErrorKind::CenterNotPreserved: return "CenterNotPreserved";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotDiagonal: return "NotDiagonal";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::MismatchedSignature: return "MismatchedSignature";
    case ErrorKind::NotAnEndo: return "NotAnEndo";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace hochlift
