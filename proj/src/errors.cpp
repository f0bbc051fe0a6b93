#include "cp1graft/errors.hpp"

namespace cp1graft {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IdentityInput: return "IdentityInput";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::NotFixedPoint: return "NotFixedPoint";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::InvalidCircle: return "InvalidCircle";
    case ErrorCode::EqualCircles: return "EqualCircles";
    case ErrorCode::PointNotOnCircles: return "PointNotOnCircles";
    case ErrorCode::TangentCircles: return "TangentCircles";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::DegenerateTriple: return "DegenerateTriple";
    case ErrorCode::MismatchedInputs: return "MismatchedInputs";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAtomic: return "NotAtomic";
    case ErrorCode::VerticesNotOnConfiguration: return "VerticesNotOnConfiguration";
    case ErrorCode::MismatchedFraming: return "MismatchedFraming";
    case ErrorCode::PathologicalFraming: return "PathologicalFraming";
    case ErrorCode::InvalidIndices: return "InvalidIndices";
    case ErrorCode::UnsupportedCurveShape: return "UnsupportedCurveShape";
    case ErrorCode::NotSameFramedHolonomy: return "NotSameFramedHolonomy";
    case ErrorCode::PoleEvaluation: return "PoleEvaluation";
    case ErrorCode::IntegerExponent: return "IntegerExponent";
    case ErrorCode::IntegrationFailure: return "IntegrationFailure";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::ExactnessRequired: return "ExactnessRequired";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace cp1graft
