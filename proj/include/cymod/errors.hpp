#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cymod {

enum class ErrorKind {
  DuplicatePoint,
  DegenerateLambda,
  FieldMismatch,
  DegenerateFamily,
  NotSemistable,
  BadPrime,
  LocationCollision,
  IrrationalLocation,
  SingularFibre,
  NotRational,
  AnnotationRequired,
  DefectNonzero,
  TraceUnavailable,
  ModelFailure,
  IrrationalLocusUnsupported,
  ParseError,
  DuplicateEntry,
  InsufficientData,
  InvalidArgument,
};

std::string_view kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cymod
