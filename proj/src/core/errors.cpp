#include "core/errors.hpp"

namespace genjacobi {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::X0OutOfRange: return "X0OutOfRange";
    case ErrorCode::JumpNonPositive: return "JumpNonPositive";
    case ErrorCode::FactorNotPositive: return "FactorNotPositive";
    case ErrorCode::EvalAtNonintegrableSingularity:
      return "EvalAtNonintegrableSingularity";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DegreeTooHighForRule: return "DegreeTooHighForRule";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::XAtSingularity: return "XAtSingularity";
    case ErrorCode::ZOnCut: return "ZOnCut";
    case ErrorCode::DegenerateNoSingularity: return "DegenerateNoSingularity";
    case ErrorCode::NegativeA2: return "NegativeA2";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::SeriesOverflow: return "SeriesOverflow";
    case ErrorCode::IntegerBUnsupportedDirect: return "IntegerBUnsupportedDirect";
    case ErrorCode::ZeroArgument: return "ZeroArgument";
    case ErrorCode::GammaPole: return "GammaPole";
    case ErrorCode::OnContour: return "OnContour";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace genjacobi
