#include "enriques_kit/error.hpp"

namespace enriques {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonSymmetric: return "NonSymmetric";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::ZeroTwist: return "ZeroTwist";
    case ErrorCode::ZeroForm: return "ZeroForm";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAnIsometry: return "NotAnIsometry";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::OrderExceedsBound: return "OrderExceedsBound";
    case ErrorCode::NonCyclotomicFactor: return "NonCyclotomicFactor";
    case ErrorCode::DecompositionFails: return "DecompositionFails";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPointed: return "NotPointed";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DependentBasis: return "DependentBasis";
    case ErrorCode::DefectOutsideKernel: return "DefectOutsideKernel";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace enriques
