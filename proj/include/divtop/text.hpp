#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "divtop/domain.hpp"

namespace divtop {

/// Element grammar, one per ring:
///   INT       "-12"
///   GAUSS     "3+2i", "-1-1i", "2i", "5"
///   POLY_FP   "x^3+2x+1" (modulus supplied separately)
///   ZSQRT_M5  "4+1s" where s stands for sqrt(-5)
///   VAL_P     "p^k", optionally "u*p^k" with a unit residue u; "1", "0"
std::string to_text(const RingElement& e);
std::string to_text(const ClassId& c);

/// Throws SyntaxError (with position) on malformed text and ModulusMissing
/// when a POLY_FP or VAL_P descriptor carries no prime.
RingElement parse_element(const RingDescriptor& ring, std::string_view text);

/// "z", "gauss", "fp", "zs5", "valp".
std::string_view ring_selector(RingTag tag);
/// Inverse of ring_selector; ModulusMissing when fp/valp lacks a prime.
RingDescriptor parse_ring_descriptor(std::string_view selector, std::optional<std::uint64_t> prime);

}  // namespace divtop
