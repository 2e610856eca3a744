#include "posetglue/error.hpp"

namespace posetglue {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DanglingNode: return "DanglingNode";
    case ErrorKind::UnknownNode: return "UnknownNode";
    case ErrorKind::DuplicateNode: return "DuplicateNode";
    case ErrorKind::EmptyPoset: return "EmptyPoset";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NotTotal: return "NotTotal";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::NotPosetMap: return "NotPosetMap";
    case ErrorKind::NotEmbedding: return "NotEmbedding";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::OverlappingCollection: return "OverlappingCollection";
    case ErrorKind::NotAntichainCollection: return "NotAntichainCollection";
    case ErrorKind::NotACover: return "NotACover";
    case ErrorKind::NotMinimal: return "NotMinimal";
    case ErrorKind::NotHeightOne: return "NotHeightOne";
    case ErrorKind::NotUniqueCover: return "NotUniqueCover";
    case ErrorKind::NotHeightZero: return "NotHeightZero";
    case ErrorKind::NotASubcollection: return "NotASubcollection";
    case ErrorKind::ZeroDimensional: return "ZeroDimensional";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::StepMismatch: return "StepMismatch";
    case ErrorKind::BrokenEmbedding: return "BrokenEmbedding";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::StepMismatch:
    case ErrorKind::BrokenEmbedding:
      return 1;
    case ErrorKind::InvariantViolation:
      return 3;
    default:
      return 2;
  }
}

}  // namespace posetglue
