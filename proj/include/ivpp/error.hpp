#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ivpp {

enum class ErrorKind {
  InvalidArgument,
  Indeterminate,
  InfiniteCoordinate,
  SemanticError,
  ParseError,
  DegenerateBranch,
  ZeroR,
  SingularMatrix,
  PoleHit,
  NonRealBoundary,
  NoClosure,
  NotACycle,
  UnsupportedPeriod,
  DegenerateX,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. `step()` is set for errors that
/// arise while iterating a map (index of the offending orbit point).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<int> step = std::nullopt)
      : std::runtime_error(message), kind_(kind), step_(step) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<int> step() const noexcept { return step_; }

 private:
  ErrorKind kind_;
  std::optional<int> step_;
};

}  // namespace ivpp
