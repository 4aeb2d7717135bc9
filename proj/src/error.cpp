#include "tropos/error.hpp"

namespace tropos {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::NonPositiveLength: return "NonPositiveLength";
    case ErrorCode::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::InvalidPoint: return "InvalidPoint";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NonUniformModel: return "NonUniformModel";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::NonIntegralSlope: return "NonIntegralSlope";
    case ErrorCode::InvalidFiringDistance: return "InvalidFiringDistance";
    case ErrorCode::NotEffectiveAway: return "NotEffectiveAway";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::NotOnGrid: return "NotOnGrid";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::NotInCanonicalSystem: return "NotInCanonicalSystem";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tropos
