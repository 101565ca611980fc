#include "qweyl/errors.hpp"

namespace qweyl {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::ZeroScalar: return "ZeroScalar";
    case ErrorCode::ExponentOverflow: return "ExponentOverflow";
    case ErrorCode::PresentationMismatch: return "PresentationMismatch";
    case ErrorCode::ModeMismatch: return "ModeMismatch";
    case ErrorCode::LambdaModeMismatch: return "LambdaModeMismatch";
    case ErrorCode::SpecMismatch: return "SpecMismatch";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::DegenerateCharacter: return "DegenerateCharacter";
    case ErrorCode::RankNotOne: return "RankNotOne";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qweyl
