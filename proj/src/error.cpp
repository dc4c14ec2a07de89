#include "grascat/error.hpp"

namespace grascat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::NotSemistandard: return "NotSemistandard";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NoDecomposition: return "NoDecomposition";
    case ErrorCode::FrozenVertex: return "FrozenVertex";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::IncomparableExchange: return "IncomparableExchange";
    case ErrorCode::NoIntegerSolution: return "NoIntegerSolution";
    case ErrorCode::NonUniqueSolution: return "NonUniqueSolution";
    case ErrorCode::NotTwoIntervals: return "NotTwoIntervals";
    case ErrorCode::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace grascat
