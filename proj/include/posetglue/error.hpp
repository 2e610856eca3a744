#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posetglue {

enum class ErrorKind {
  // input errors
  CycleDetected,
  DanglingNode,
  UnknownNode,
  DuplicateNode,
  EmptyPoset,
  EmptySet,
  NotTotal,
  NotComplete,
  NotPosetMap,
  NotEmbedding,
  NotCompatible,
  OverlappingCollection,
  NotAntichainCollection,
  NotACover,
  NotMinimal,
  NotHeightOne,
  NotUniqueCover,
  NotHeightZero,
  NotASubcollection,
  ZeroDimensional,
  InvalidArgument,
  ParseError,
  // certificate failures
  StepMismatch,
  BrokenEmbedding,
  // a construction produced something its own postconditions reject
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Exit-code class used by the CLI: 1 verification failure, 2 input error,
/// 3 internal invariant violation.
int exit_code_for(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace posetglue
