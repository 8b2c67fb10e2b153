#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "divtop/element.hpp"

namespace divtop {

enum class UnitCount { Finite, CountablyInfinite, Uncountable };

struct AdapterCapabilities {
  bool has_gcd = false;
  bool is_valuation = false;
  bool is_atomic = false;
  bool is_ufd = false;
  UnitCount unit_count = UnitCount::Finite;
  /// Number of units when unit_count is Finite, zero otherwise.
  std::uint64_t finite_unit_count = 0;

  friend bool operator==(const AdapterCapabilities&, const AdapterCapabilities&) = default;
};

/// Ring tag plus the prime parameter for POLY_FP and VAL_P.
struct RingDescriptor {
  RingTag tag = RingTag::Int;
  std::optional<std::uint64_t> prime;

  friend bool operator==(const RingDescriptor&, const RingDescriptor&) = default;
};

/// Arithmetic backend for one concrete integral domain.
///
/// The raw hooks below assume their preconditions hold (nonzero, nonunit,
/// same ring); the free functions further down validate inputs, raise the
/// contract errors and wrap results into ClassId.
class Domain {
 public:
  virtual ~Domain() = default;

  virtual RingDescriptor descriptor() const = 0;
  virtual AdapterCapabilities capabilities() const = 0;

  /// Throws RingMismatch unless e is an element of this ring.
  virtual void check_member(const RingElement& e) const = 0;

  virtual bool is_zero(const RingElement& e) const = 0;
  virtual bool is_unit(const RingElement& e) const = 0;
  virtual RingElement one() const = 0;
  virtual RingElement multiply(const RingElement& a, const RingElement& b) const = 0;
  /// Throws CapabilityMissing where the ring model carries no addition.
  virtual RingElement add(const RingElement& a, const RingElement& b) const = 0;

  /// Canonical associate of a nonzero element.
  virtual RingElement normal_form(const RingElement& e) const = 0;
  /// Exact divisibility test, a nonzero.
  virtual bool divides_nonzero(const RingElement& a, const RingElement& b) const = 0;
  /// c with b = a * c; throws InvalidArgument when a does not divide b.
  virtual RingElement exact_quotient(const RingElement& b, const RingElement& a) const = 0;
  /// Canonical nonunit divisors of a nonzero nonunit, ascending, unique.
  virtual std::vector<RingElement> nonunit_divisors(const RingElement& a) const = 0;
  virtual bool irreducible_nonunit(const RingElement& a) const = 0;
  /// Canonical irreducible factors with multiplicity whose product is
  /// associated to a.
  virtual std::vector<RingElement> factor_nonunit(const RingElement& a) const = 0;
  /// Canonical gcd of two nonzero elements (one() when coprime). Throws
  /// CapabilityMissing when the ring is not a GCD domain.
  virtual RingElement gcd_nonzero(const RingElement& a, const RingElement& b) const = 0;
};

using DomainPtr = std::shared_ptr<const Domain>;

DomainPtr make_int_domain();
DomainPtr make_gauss_domain();
/// p must be a prime <= 17.
DomainPtr make_poly_fp_domain(std::uint32_t prime);
DomainPtr make_zsqrt_m5_domain();
DomainPtr make_valuation_domain(std::uint64_t prime);
DomainPtr make_domain(const RingDescriptor& descriptor);

// Contract operations. Each validates ring membership first.

/// Canonical class of a nonzero nonunit. ZeroElement / UnitElement otherwise.
ClassId canonical_class(const Domain& domain, const RingElement& e);

/// a | b. ZeroDivisor when a = 0.
bool divides(const Domain& domain, const RingElement& a, const RingElement& b);

/// The basic open U_a as a sorted list of classes; always contains [a].
std::vector<ClassId> divisor_classes(const Domain& domain, const RingElement& a);

bool is_irreducible(const Domain& domain, const RingElement& a);

/// Irreducible factorization with multiplicity, sorted. NotAtomic when the
/// adapter does not advertise atomicity.
std::vector<ClassId> factor(const Domain& domain, const RingElement& a);

/// nullopt means the gcd is a unit (no common nonunit divisor).
std::optional<ClassId> gcd_class(const Domain& domain, const RingElement& a,
                                 const RingElement& b);

ClassId lcm_class(const Domain& domain, const RingElement& a, const RingElement& b);

ClassId mul_class(const Domain& domain, const ClassId& a, const ClassId& b);

bool associated(const Domain& domain, const RingElement& a, const RingElement& b);

}  // namespace divtop
