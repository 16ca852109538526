#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ecmg {

enum class ErrorKind {
  DuplicateParallelEdge,
  SelfLoop,
  ColourOutOfRange,
  VertexOutOfRange,
  InvalidArgument,
  HypothesisNotMet,
  GuaranteeViolated,
  BudgetExceeded,
  EmptyMatching,
  TooFewColours,
  LiftFailed,
  PreconditionViolated,
  OutOfStatedRange,
  ParityMismatch,
  InfeasibleExhaustive,
  ConstraintUnsatisfiable,
  ParseError,
  InvariantViolated,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every recoverable failure in the library is reported through this type.
/// `kind()` is the stable, machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace ecmg
