#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gmt {

enum class ErrorCode {
  DimensionMismatch,
  InvalidInput,
  UnboundedBall,
  Unsupported,
  NonConvergence,
  RefinementRequired,
  DegenerateLevel,
  InconsistentBoundary,
  BoundaryConditionViolated,
  SizeCapExceeded,
  RefinementFailure,
  NotLipschitz,
  NotIsometric,
  Parse,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by routines that locate a violating pair of items (cells, points).
class PairError : public Error {
 public:
  PairError(ErrorCode code, const std::string& what, std::size_t first,
            std::size_t second)
      : Error(code, what), first_(first), second_(second) {}

  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

}  // namespace gmt
