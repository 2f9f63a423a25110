#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace enriques {

/// Failure categories raised by the toolkit. Each operation documents which
/// codes it may raise; the CLI maps them to exit status 1.
enum class ErrorCode {
  NonSymmetric,
  Degenerate,
  UnknownName,
  ZeroTwist,
  ZeroForm,
  DimensionMismatch,
  NotAnIsometry,
  NotUnimodular,
  OrderExceedsBound,
  NonCyclotomicFactor,
  DecompositionFails,
  NotPrimitive,
  EmptyDomain,
  UnknownFamily,
  InvalidArgument,
  NotPointed,
  EmptyInput,
  DependentBasis,
  DefectOutsideKernel,
  ParseError,
  UsageError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace enriques
