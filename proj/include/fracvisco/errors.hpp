#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fracvisco {

/// Failure categories raised by the library. The CLI prints the name as a
/// machine-parsable prefix, so keep `to_string` in sync when adding entries.
enum class ErrorKind {
  NonPositiveOrder,
  OrderOutOfRange,
  Overflow,
  QuadratureNonConvergence,
  InsufficientTailCoverage,
  GridTooCoarse,
  ContourEvaluationFailure,
  PoleHit,
  OriginTooSingular,
  NonNegativeOrderViolation,
  MissingInitialData,
  IntegerOrder,
  GammaOutOfRange,
  InvalidModelCoefficients,
  NonCausalInput,
  InvalidSignal,
  MalformedCsv,
  MalformedModel,
  IoFailure,
  // Not thrown; attached to results that are usable but suspicious.
  DisagreementWarning,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPositiveOrder: return "NonPositiveOrder";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorKind::InsufficientTailCoverage: return "InsufficientTailCoverage";
    case ErrorKind::GridTooCoarse: return "GridTooCoarse";
    case ErrorKind::ContourEvaluationFailure: return "ContourEvaluationFailure";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::OriginTooSingular: return "OriginTooSingular";
    case ErrorKind::NonNegativeOrderViolation: return "NonNegativeOrderViolation";
    case ErrorKind::MissingInitialData: return "MissingInitialData";
    case ErrorKind::IntegerOrder: return "IntegerOrder";
    case ErrorKind::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorKind::InvalidModelCoefficients: return "InvalidModelCoefficients";
    case ErrorKind::NonCausalInput: return "NonCausalInput";
    case ErrorKind::InvalidSignal: return "InvalidSignal";
    case ErrorKind::MalformedCsv: return "MalformedCsv";
    case ErrorKind::MalformedModel: return "MalformedModel";
    case ErrorKind::IoFailure: return "IoFailure";
    case ErrorKind::DisagreementWarning: return "DisagreementWarning";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fracvisco
