#pragma once

#include <span>
#include <vector>

#include "divtop/domain.hpp"

namespace divtop {

/// Pairwise non-associated irreducibles (primes, in a UFD) of one ring.
struct PrimeList {
  RingTag tag = RingTag::Int;
  std::vector<ClassId> members;
};

struct EuclidStep {
  ClassId prime;
  /// The first nonzero nonunit x_m = a_1^m + a_2 ... a_n.
  RingElement witness;
  unsigned m = 1;
};

inline constexpr unsigned kMaxEuclidExponent = 64;

/// Validates the input list: nonempty, one ring, irreducible, pairwise
/// non-associated. Throws InvalidArgument otherwise.
PrimeList make_prime_list(const Domain& domain, std::span<const ClassId> members);

/// One step of the Euclid-style construction: the smallest irreducible
/// factor of the first nonzero nonunit x_m, m = 1, 2, ... A one-element list
/// uses the empty tail product 1. CapabilityMissing unless the ring is a UFD
/// with finitely many units; SizeGuard when no nonunit appears by m = 64.
EuclidStep euclid_step(const Domain& domain, const PrimeList& primes);

/// count successive steps, each fed the grown list.
std::vector<EuclidStep> prime_stream_steps(const Domain& domain, const PrimeList& start, unsigned count);

PrimeList prime_stream(const Domain& domain, const PrimeList& start, unsigned count);

}  // namespace divtop
