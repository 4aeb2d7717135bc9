#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropos {

enum class ErrorCode {
  ParseError,
  DuplicateId,
  NonPositiveLength,
  DanglingEndpoint,
  UnknownId,
  InvalidPoint,
  GraphMismatch,
  NonUniformModel,
  DisconnectedInput,
  NonIntegralSlope,
  InvalidFiringDistance,
  NotEffectiveAway,
  NotEffective,
  NotOnGrid,
  NotGeneric,
  NotInCanonicalSystem,
  BudgetExceeded,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

/// Exception carrying a machine-readable code next to the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropos
