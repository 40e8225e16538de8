#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ocpoly {

enum class ErrorKind {
  IndexOutOfRange,
  DirectedCycle,
  TransitiveCover,
  DuplicateCover,
  LimitExceeded,
  NotZigzag,
  UnknownEdge,
  NotMinimal,
  DimensionMismatch,
  EmptyPolytope,
  Unbounded,
  NotFullDimensional,
  NotChainUnion,
  NotUnimodular,
  ParseError,
  PartialPartition,
  ConflictingAssignment,
  InvalidArgument,
};

std::string_view error_kind_name(ErrorKind kind);

// Domain error raised by every library operation. The kind is stable and is
// what the CLI reports; the message carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace ocpoly
