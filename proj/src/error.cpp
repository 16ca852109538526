#include "ecmg/error.hpp"

namespace ecmg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DuplicateParallelEdge: return "DuplicateParallelEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::ColourOutOfRange: return "ColourOutOfRange";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::GuaranteeViolated: return "GuaranteeViolated";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::EmptyMatching: return "EmptyMatching";
    case ErrorKind::TooFewColours: return "TooFewColours";
    case ErrorKind::LiftFailed: return "LiftFailed";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::OutOfStatedRange: return "OutOfStatedRange";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::InfeasibleExhaustive: return "InfeasibleExhaustive";
    case ErrorKind::ConstraintUnsatisfiable: return "ConstraintUnsatisfiable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolated: return "InvariantViolated";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace ecmg
