#include "divtop/domain.hpp"

namespace divtop {

namespace {

const BigInt& divisor_enumeration_bound() {
  static const BigInt bound("1000000000000");
  return bound;
}

class IntDomain final : public Domain {
 public:
  RingDescriptor descriptor() const override { return {RingTag::Int, std::nullopt}; }

  AdapterCapabilities capabilities() const override {
    return {.has_gcd = true, .is_valuation = false, .is_atomic = true, .is_ufd = true,
            .unit_count = UnitCount::Finite, .finite_unit_count = 2};
  }

  void check_member(const RingElement& e) const override { (void)e.as<IntValue>(); }

  bool is_zero(const RingElement& e) const override { return e.as<IntValue>().value == 0; }
  bool is_unit(const RingElement& e) const override { return abs(e.as<IntValue>().value) == 1; }
  RingElement one() const override { return RingElement::integer(1); }

  RingElement multiply(const RingElement& a, const RingElement& b) const override {
    return RingElement::integer(value(a) * value(b));
  }
  RingElement add(const RingElement& a, const RingElement& b) const override {
    return RingElement::integer(value(a) + value(b));
  }

  RingElement normal_form(const RingElement& e) const override {
    return RingElement::integer(abs(value(e)));
  }

  bool divides_nonzero(const RingElement& a, const RingElement& b) const override {
    return value(b) % value(a) == 0;
  }

  RingElement exact_quotient(const RingElement& b, const RingElement& a) const override {
    if (value(a) == 0 || value(b) % value(a) != 0) {
      throw Error(ErrorCode::InvalidArgument, "inexact integer quotient");
    }
    return RingElement::integer(value(b) / value(a));
  }

  std::vector<RingElement> nonunit_divisors(const RingElement& a) const override {
    const BigInt n = abs(value(a));
    if (n > divisor_enumeration_bound()) {
      throw Error(ErrorCode::SizeGuard, "integer divisor enumeration limited to |a| <= 10^12");
    }
    std::vector<RingElement> out;
    for (auto& d : integer::divisors(n)) {
      if (d != 1) out.push_back(RingElement::integer(std::move(d)));
    }
    return out;
  }

  bool irreducible_nonunit(const RingElement& a) const override {
    return integer::is_prime(abs(value(a)));
  }

  std::vector<RingElement> factor_nonunit(const RingElement& a) const override {
    std::vector<RingElement> out;
    for (const auto& [p, e] : integer::factorize(abs(value(a)))) {
      for (unsigned i = 0; i < e; ++i) out.push_back(RingElement::integer(p));
    }
    return out;
  }

  RingElement gcd_nonzero(const RingElement& a, const RingElement& b) const override {
    return RingElement::integer(boost::multiprecision::gcd(abs(value(a)), abs(value(b))));
  }

 private:
  static const BigInt& value(const RingElement& e) { return e.as<IntValue>().value; }
};

}  // namespace

DomainPtr make_int_domain() {
  static const DomainPtr instance = std::make_shared<IntDomain>();
  return instance;
}

}  // namespace divtop
