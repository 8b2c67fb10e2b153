#include "divtop/element.hpp"

#include <algorithm>

namespace divtop {

std::string_view ring_tag_name(RingTag tag) {
  switch (tag) {
    case RingTag::Int: return "INT";
    case RingTag::Gauss: return "GAUSS";
    case RingTag::PolyFp: return "POLY_FP";
    case RingTag::ZSqrtM5: return "ZSQRT_M5";
    case RingTag::ValP: return "VAL_P";
  }
  return "?";
}

RingElement RingElement::integer(BigInt value) { return RingElement(IntValue{std::move(value)}); }

RingElement RingElement::gaussian(BigInt re, BigInt im) {
  return RingElement(GaussValue{std::move(re), std::move(im)});
}

RingElement RingElement::polynomial(const std::vector<std::int64_t>& coeffs, std::uint32_t modulus) {
  if (modulus < 2) throw Error(ErrorCode::InvalidArgument, "polynomial modulus must be >= 2");
  PolyFpValue v;
  v.modulus = modulus;
  v.coeffs.reserve(coeffs.size());
  const auto m = static_cast<std::int64_t>(modulus);
  for (auto c : coeffs) v.coeffs.push_back(static_cast<std::uint32_t>(((c % m) + m) % m));
  while (!v.coeffs.empty() && v.coeffs.back() == 0) v.coeffs.pop_back();
  return RingElement(std::move(v));
}

RingElement RingElement::zsqrt_m5(BigInt x, BigInt y) {
  return RingElement(ZSqrtM5Value{std::move(x), std::move(y)});
}

RingElement RingElement::valuation(std::uint64_t prime, std::uint64_t exponent, std::uint64_t unit) {
  if (prime < 2) throw Error(ErrorCode::InvalidArgument, "valuation prime must be >= 2");
  if (unit % prime == 0) throw Error(ErrorCode::InvalidArgument, "valuation unit residue must be nonzero mod p");
  return RingElement(ValPValue{prime, exponent, unit % prime});
}

RingElement RingElement::valuation_zero(std::uint64_t prime) {
  if (prime < 2) throw Error(ErrorCode::InvalidArgument, "valuation prime must be >= 2");
  return RingElement(ValPValue{prime, std::nullopt, 1});
}

namespace {

std::strong_ordering compare_big(const BigInt& a, const BigInt& b) {
  const int c = a.compare(b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_payload(const IntValue& a, const IntValue& b) {
  return compare_big(a.value, b.value);
}

std::strong_ordering compare_payload(const GaussValue& a, const GaussValue& b) {
  if (auto c = compare_big(a.re * a.re + a.im * a.im, b.re * b.re + b.im * b.im); c != 0) return c;
  if (auto c = compare_big(a.re, b.re); c != 0) return c;
  return compare_big(a.im, b.im);
}

std::strong_ordering compare_payload(const PolyFpValue& a, const PolyFpValue& b) {
  if (auto c = a.modulus <=> b.modulus; c != 0) return c;
  if (auto c = a.coeffs.size() <=> b.coeffs.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.coeffs.rbegin(), a.coeffs.rend(),
                                                b.coeffs.rbegin(), b.coeffs.rend());
}

std::strong_ordering compare_payload(const ZSqrtM5Value& a, const ZSqrtM5Value& b) {
  if (auto c = compare_big(a.norm(), b.norm()); c != 0) return c;
  if (auto c = compare_big(a.x, b.x); c != 0) return c;
  return compare_big(a.y, b.y);
}

std::strong_ordering compare_payload(const ValPValue& a, const ValPValue& b) {
  if (auto c = a.prime <=> b.prime; c != 0) return c;
  // zero sorts last
  if (a.exponent.has_value() != b.exponent.has_value()) {
    return a.exponent.has_value() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.exponent <=> b.exponent; c != 0) return c;
  return a.unit <=> b.unit;
}

}  // namespace

std::strong_ordering compare_elements(const RingElement& a, const RingElement& b) {
  if (auto c = a.payload().index() <=> b.payload().index(); c != 0) return c;
  return std::visit(
      [&](const auto& lhs) -> std::strong_ordering {
        using T = std::decay_t<decltype(lhs)>;
        return compare_payload(lhs, std::get<T>(b.payload()));
      },
      a.payload());
}

}  // namespace divtop
