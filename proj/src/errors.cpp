#include "cymod/errors.hpp"

namespace cymod {

std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::DegenerateLambda: return "DegenerateLambda";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegenerateFamily: return "DegenerateFamily";
    case ErrorKind::NotSemistable: return "NotSemistable";
    case ErrorKind::BadPrime: return "BadPrime";
    case ErrorKind::LocationCollision: return "LocationCollision";
    case ErrorKind::IrrationalLocation: return "IrrationalLocation";
    case ErrorKind::SingularFibre: return "SingularFibre";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::AnnotationRequired: return "AnnotationRequired";
    case ErrorKind::DefectNonzero: return "DefectNonzero";
    case ErrorKind::TraceUnavailable: return "TraceUnavailable";
    case ErrorKind::ModelFailure: return "ModelFailure";
    case ErrorKind::IrrationalLocusUnsupported: return "IrrationalLocusUnsupported";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::InsufficientData: return "InsufficientData";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace cymod
