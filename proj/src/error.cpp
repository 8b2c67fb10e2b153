#include "divtop/error.hpp"

namespace divtop {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::UnitElement: return "UnitElement";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NotAtomic: return "NotAtomic";
    case ErrorCode::CapabilityMissing: return "CapabilityMissing";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::FragmentTooLarge: return "FragmentTooLarge";
    case ErrorCode::FragmentTooLargeForEnumeration: return "FragmentTooLargeForEnumeration";
    case ErrorCode::PointNotInFragment: return "PointNotInFragment";
    case ErrorCode::OwnershipMismatch: return "OwnershipMismatch";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::AssociatedInputs: return "AssociatedInputs";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ModulusMissing: return "ModulusMissing";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Error";
}

}  // namespace divtop
