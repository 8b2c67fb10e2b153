#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "divtop/error.hpp"
#include "divtop/integer.hpp"

namespace divtop {

enum class RingTag { Int, Gauss, PolyFp, ZSqrtM5, ValP };

/// "INT", "GAUSS", "POLY_FP", "ZSQRT_M5", "VAL_P".
std::string_view ring_tag_name(RingTag tag);

struct IntValue {
  BigInt value;
  friend bool operator==(const IntValue&, const IntValue&) = default;
};

struct GaussValue {
  BigInt re;
  BigInt im;
  friend bool operator==(const GaussValue&, const GaussValue&) = default;
};

/// Polynomial over F_p, coefficients low degree first, each in [0, p), no
/// trailing zero. The zero polynomial has no coefficients.
struct PolyFpValue {
  std::vector<std::uint32_t> coeffs;
  std::uint32_t modulus = 2;
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  friend bool operator==(const PolyFpValue&, const PolyFpValue&) = default;
};

/// x + y*sqrt(-5).
struct ZSqrtM5Value {
  BigInt x;
  BigInt y;
  BigInt norm() const { return x * x + 5 * y * y; }
  friend bool operator==(const ZSqrtM5Value&, const ZSqrtM5Value&) = default;
};

/// u * p^k in a discrete valuation ring with uniformizer p. The unit is kept
/// as its residue in F_p^*; associate classes depend only on k. An absent
/// exponent encodes zero.
struct ValPValue {
  std::uint64_t prime = 2;
  std::optional<std::uint64_t> exponent;
  std::uint64_t unit = 1;
  friend bool operator==(const ValPValue&, const ValPValue&) = default;
};

class RingElement {
 public:
  using Payload = std::variant<IntValue, GaussValue, PolyFpValue, ZSqrtM5Value, ValPValue>;

  static RingElement integer(BigInt value);
  static RingElement gaussian(BigInt re, BigInt im);
  /// Reduces every coefficient into [0, p) and trims trailing zeros.
  static RingElement polynomial(const std::vector<std::int64_t>& coeffs, std::uint32_t modulus);
  static RingElement zsqrt_m5(BigInt x, BigInt y);
  static RingElement valuation(std::uint64_t prime, std::uint64_t exponent, std::uint64_t unit = 1);
  static RingElement valuation_zero(std::uint64_t prime);

  explicit RingElement(Payload payload) : payload_(std::move(payload)) {}

  RingTag tag() const { return static_cast<RingTag>(payload_.index()); }
  const Payload& payload() const { return payload_; }

  /// Payload access; throws RingMismatch when the tag differs.
  template <class T>
  const T& as() const;

  friend bool operator==(const RingElement&, const RingElement&) = default;

 private:
  Payload payload_;
};

template <class T>
const T& RingElement::as() const {
  if (const auto* value = std::get_if<T>(&payload_)) return *value;
  throw Error(ErrorCode::RingMismatch,
              "element belongs to " + std::string(ring_tag_name(tag())));
}

/// Total order used for point ordering and deterministic tie-breaking.
/// INT by value; GAUSS and ZSQRT_M5 by norm then coordinates; POLY_FP by
/// degree then coefficients from the leading one down; VAL_P by exponent.
std::strong_ordering compare_elements(const RingElement& a, const RingElement& b);

class Domain;
class ClassId;
ClassId canonical_class(const Domain& domain, const RingElement& e);

/// Association class [a] of a nonzero nonunit, held by its canonical
/// representative. Only canonical_class can create one.
class ClassId {
 public:
  const RingElement& rep() const { return rep_; }
  RingTag tag() const { return rep_.tag(); }

  friend bool operator==(const ClassId&, const ClassId&) = default;
  friend std::strong_ordering operator<=>(const ClassId& a, const ClassId& b) {
    return compare_elements(a.rep_, b.rep_);
  }

 private:
  explicit ClassId(RingElement rep) : rep_(std::move(rep)) {}
  friend ClassId canonical_class(const Domain& domain, const RingElement& e);

  RingElement rep_;
};

}  // namespace divtop
