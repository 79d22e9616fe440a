#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace overpart {

enum class ErrorKind {
  WindowViolation,
  PrecisionExceeded,
  NotInvertible,
  EmptyWindow,
  NonconvergentProduct,
  NonconvergentPhi,
  DivisionByZero,
  Domain,
  InternalConsistency,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` distinguishes contract
/// violations (bad input) from internal-consistency failures (a bug).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace overpart
