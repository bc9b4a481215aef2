#include "posetkit/errors.hpp"

namespace posetkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::NoBottom: return "NoBottom";
    case ErrorKind::NoTop: return "NoTop";
    case ErrorKind::Trivial: return "Trivial";
    case ErrorKind::ForeignSubset: return "ForeignSubset";
    case ErrorKind::EmptyComplementSet: return "EmptyComplementSet";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::PredicateUnknown: return "PredicateUnknown";
    case ErrorKind::UnknownProperty: return "UnknownProperty";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Error";
}

}  // namespace posetkit
