#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bbm {

enum class ErrorCode {
  OddCount,
  UnbalancedColors,
  NotStrictlyConvex,
  DuplicatePoint,
  NonFiniteCoordinate,
  SharedEndpoint,
  NotOnCircle,
  NotADiagonal,
  TooLarge,
  Incomparable,
  Parse,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` tells callers (and the CLI
/// exit-code mapping) which precondition was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace bbm
