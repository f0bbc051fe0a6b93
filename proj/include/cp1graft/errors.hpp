#pragma once

#include <stdexcept>
#include <string>

namespace cp1graft {

enum class ErrorCode {
  // mobius
  IdentityInput,
  NotElliptic,
  NotFixedPoint,
  CoincidentPoints,
  SingularMatrix,
  InvalidPoint,
  // circles
  InvalidCircle,
  EqualCircles,
  PointNotOnCircles,
  TangentCircles,
  // configurations
  DegenerateConfiguration,
  NotHyperbolic,
  DegenerateTriple,
  MismatchedInputs,
  // triangles
  OutOfRange,
  NotAtomic,
  VerticesNotOnConfiguration,
  MismatchedFraming,
  PathologicalFraming,
  // grafting
  InvalidIndices,
  UnsupportedCurveShape,
  NotSameFramedHolonomy,
  // differentials / monodromy
  PoleEvaluation,
  IntegerExponent,
  IntegrationFailure,
  InvalidPath,
  // plumbing
  ExactnessRequired,
  ParseError,
  SchemaError,
  Internal,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& what);

}  // namespace cp1graft
