#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace divtop {

enum class ErrorCode {
  ZeroElement,
  UnitElement,
  ZeroDivisor,
  NotAtomic,
  CapabilityMissing,
  RingMismatch,
  FragmentTooLarge,
  FragmentTooLargeForEnumeration,
  PointNotInFragment,
  OwnershipMismatch,
  SizeGuard,
  EmptyFamily,
  NotIrreducible,
  AssociatedInputs,
  SyntaxError,
  ModulusMissing,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure with the zero-based character offset where it was detected.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& message)
      : Error(ErrorCode::SyntaxError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace divtop
