#include "divtop/domain.hpp"

namespace divtop {

namespace {

constexpr std::uint64_t kMaxEnumeratedExponent = 100000;

/// Shared model of Z_(p) and F_p[[x]]: an element is u * p^k and its
/// association class is determined by k alone.
class ValuationDomain final : public Domain {
 public:
  explicit ValuationDomain(std::uint64_t p) : p_(p) {
    if (!integer::is_prime(p)) throw Error(ErrorCode::InvalidArgument, "VAL_P parameter must be prime");
  }

  RingDescriptor descriptor() const override { return {RingTag::ValP, p_}; }

  AdapterCapabilities capabilities() const override {
    return {.has_gcd = true, .is_valuation = true, .is_atomic = true, .is_ufd = true,
            .unit_count = UnitCount::CountablyInfinite, .finite_unit_count = 0};
  }

  void check_member(const RingElement& e) const override {
    if (e.as<ValPValue>().prime != p_) {
      throw Error(ErrorCode::RingMismatch, "valuation element for a different prime");
    }
  }

  bool is_zero(const RingElement& e) const override { return !get(e).exponent.has_value(); }
  bool is_unit(const RingElement& e) const override { return get(e).exponent == 0u; }
  RingElement one() const override { return RingElement::valuation(p_, 0); }

  RingElement multiply(const RingElement& a, const RingElement& b) const override {
    const auto &x = get(a), &y = get(b);
    if (!x.exponent || !y.exponent) return RingElement::valuation_zero(p_);
    const auto unit = static_cast<std::uint64_t>(BigInt(BigInt(x.unit) * y.unit % p_));
    return RingElement::valuation(p_, *x.exponent + *y.exponent, unit);
  }

  RingElement add(const RingElement&, const RingElement&) const override {
    throw Error(ErrorCode::CapabilityMissing, "VAL_P models classes only and carries no addition");
  }

  RingElement normal_form(const RingElement& e) const override {
    return RingElement::valuation(p_, exponent(e));
  }

  bool divides_nonzero(const RingElement& a, const RingElement& b) const override {
    const auto& y = get(b);
    return !y.exponent || exponent(a) <= *y.exponent;
  }

  RingElement exact_quotient(const RingElement& b, const RingElement& a) const override {
    if (!divides_nonzero(a, b)) throw Error(ErrorCode::InvalidArgument, "inexact valuation quotient");
    const auto& y = get(b);
    if (!y.exponent) return b;
    const BigInt inv = boost::multiprecision::powm(BigInt(get(a).unit), BigInt(p_ - 2), BigInt(p_));
    const auto unit = static_cast<std::uint64_t>(BigInt(inv * y.unit % p_));
    return RingElement::valuation(p_, *y.exponent - exponent(a), unit);
  }

  std::vector<RingElement> nonunit_divisors(const RingElement& a) const override {
    const std::uint64_t k = exponent(a);
    if (k > kMaxEnumeratedExponent) {
      throw Error(ErrorCode::SizeGuard, "VAL_P divisor enumeration limited to exponent 100000");
    }
    std::vector<RingElement> out;
    for (std::uint64_t j = 1; j <= k; ++j) out.push_back(RingElement::valuation(p_, j));
    return out;
  }

  bool irreducible_nonunit(const RingElement& a) const override { return exponent(a) == 1; }

  std::vector<RingElement> factor_nonunit(const RingElement& a) const override {
    return std::vector<RingElement>(exponent(a), RingElement::valuation(p_, 1));
  }

  RingElement gcd_nonzero(const RingElement& a, const RingElement& b) const override {
    return RingElement::valuation(p_, std::min(exponent(a), exponent(b)));
  }

 private:
  static const ValPValue& get(const RingElement& e) { return e.as<ValPValue>(); }
  static std::uint64_t exponent(const RingElement& e) {
    const auto& v = get(e);
    if (!v.exponent) throw Error(ErrorCode::ZeroElement, "zero has no valuation exponent");
    return *v.exponent;
  }

  std::uint64_t p_;
};

}  // namespace

DomainPtr make_valuation_domain(std::uint64_t prime) { return std::make_shared<ValuationDomain>(prime); }

}  // namespace divtop
