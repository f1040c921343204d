#pragma once

#include <stdexcept>
#include <string>

namespace genjacobi {

enum class ErrorCode {
  ExponentOutOfRange,
  X0OutOfRange,
  JumpNonPositive,
  FactorNotPositive,
  EvalAtNonintegrableSingularity,
  NoConvergence,
  DegreeTooHighForRule,
  IndexOutOfRange,
  XAtSingularity,
  ZOnCut,
  DegenerateNoSingularity,
  NegativeA2,
  WindowTooSmall,
  SeriesOverflow,
  IntegerBUnsupportedDirect,
  ZeroArgument,
  GammaPole,
  OnContour,
  ParseError,
  ValidationError,
  IoError,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

const char* error_code_name(ErrorCode code);

}  // namespace genjacobi
