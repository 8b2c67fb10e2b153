#include "divtop/domain.hpp"

#include <algorithm>

namespace divtop {

namespace {

void require_nonzero_nonunit(const Domain& domain, const RingElement& e) {
  domain.check_member(e);
  if (domain.is_zero(e)) throw Error(ErrorCode::ZeroElement, "element is zero");
  if (domain.is_unit(e)) throw Error(ErrorCode::UnitElement, "element is a unit");
}

}  // namespace

ClassId canonical_class(const Domain& domain, const RingElement& e) {
  require_nonzero_nonunit(domain, e);
  return ClassId(domain.normal_form(e));
}

bool divides(const Domain& domain, const RingElement& a, const RingElement& b) {
  domain.check_member(a);
  domain.check_member(b);
  if (domain.is_zero(a)) throw Error(ErrorCode::ZeroDivisor, "divisor is zero");
  if (domain.is_zero(b)) return true;
  return domain.divides_nonzero(a, b);
}

bool associated(const Domain& domain, const RingElement& a, const RingElement& b) {
  return divides(domain, a, b) && divides(domain, b, a);
}

std::vector<ClassId> divisor_classes(const Domain& domain, const RingElement& a) {
  require_nonzero_nonunit(domain, a);
  std::vector<ClassId> out;
  for (const auto& d : domain.nonunit_divisors(a)) out.push_back(canonical_class(domain, d));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_irreducible(const Domain& domain, const RingElement& a) {
  require_nonzero_nonunit(domain, a);
  return domain.irreducible_nonunit(a);
}

std::vector<ClassId> factor(const Domain& domain, const RingElement& a) {
  if (!domain.capabilities().is_atomic) {
    throw Error(ErrorCode::NotAtomic, "adapter does not advertise atomic factorization");
  }
  require_nonzero_nonunit(domain, a);
  std::vector<ClassId> out;
  for (const auto& q : domain.factor_nonunit(a)) out.push_back(canonical_class(domain, q));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ClassId> gcd_class(const Domain& domain, const RingElement& a, const RingElement& b) {
  if (!domain.capabilities().has_gcd) {
    throw Error(ErrorCode::CapabilityMissing, "ring is not a GCD domain");
  }
  require_nonzero_nonunit(domain, a);
  require_nonzero_nonunit(domain, b);
  RingElement g = domain.gcd_nonzero(a, b);
  if (domain.is_unit(g)) return std::nullopt;
  return canonical_class(domain, g);
}

ClassId lcm_class(const Domain& domain, const RingElement& a, const RingElement& b) {
  if (!domain.capabilities().has_gcd) {
    throw Error(ErrorCode::CapabilityMissing, "ring is not a GCD domain");
  }
  require_nonzero_nonunit(domain, a);
  require_nonzero_nonunit(domain, b);
  RingElement g = domain.gcd_nonzero(a, b);
  return canonical_class(domain, domain.exact_quotient(domain.multiply(a, b), g));
}

ClassId mul_class(const Domain& domain, const ClassId& a, const ClassId& b) {
  if (a.tag() != b.tag()) throw Error(ErrorCode::RingMismatch, "classes from different rings");
  return canonical_class(domain, domain.multiply(a.rep(), b.rep()));
}

DomainPtr make_domain(const RingDescriptor& descriptor) {
  auto need_prime = [&]() -> std::uint64_t {
    if (!descriptor.prime) throw Error(ErrorCode::ModulusMissing, "ring requires a prime parameter");
    return *descriptor.prime;
  };
  switch (descriptor.tag) {
    case RingTag::Int: return make_int_domain();
    case RingTag::Gauss: return make_gauss_domain();
    case RingTag::PolyFp: return make_poly_fp_domain(static_cast<std::uint32_t>(need_prime()));
    case RingTag::ZSqrtM5: return make_zsqrt_m5_domain();
    case RingTag::ValP: return make_valuation_domain(need_prime());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown ring tag");
}

}  // namespace divtop
