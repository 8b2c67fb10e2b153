#include "divtop/prime_stream.hpp"

#include <stdexcept>

namespace divtop {

PrimeList make_prime_list(const Domain& domain, std::span<const ClassId> members) {
  if (members.empty()) throw Error(ErrorCode::InvalidArgument, "prime list is empty");
  PrimeList list{members.front().tag(), {}};
  for (const auto& m : members) {
    if (m.tag() != list.tag) throw Error(ErrorCode::RingMismatch, "prime list mixes rings");
    if (!is_irreducible(domain, m.rep())) {
      throw Error(ErrorCode::NotIrreducible, "prime list member is not irreducible");
    }
    for (const auto& existing : list.members) {
      if (existing == m) throw Error(ErrorCode::AssociatedInputs, "prime list members must be non-associated");
    }
    list.members.push_back(m);
  }
  return list;
}

EuclidStep euclid_step(const Domain& domain, const PrimeList& primes) {
  const auto caps = domain.capabilities();
  if (!caps.is_ufd || caps.unit_count != UnitCount::Finite) {
    throw Error(ErrorCode::CapabilityMissing, "Euclid step needs a UFD with finitely many units");
  }
  if (primes.members.empty()) throw Error(ErrorCode::InvalidArgument, "prime list is empty");

  const RingElement& first = primes.members.front().rep();
  RingElement tail = domain.one();
  for (std::size_t i = 1; i < primes.members.size(); ++i) {
    tail = domain.multiply(tail, primes.members[i].rep());
  }
  RingElement power = first;
  for (unsigned m = 1; m <= kMaxEuclidExponent; ++m, power = domain.multiply(power, first)) {
    RingElement x = domain.add(power, tail);
    if (domain.is_zero(x) || domain.is_unit(x)) continue;
    // a_1 divides a_1^m but not the tail, the others divide the tail but not
    // a_1^m, so none of them divides x.
    for (const auto& a : primes.members) {
      if (divides(domain, a.rep(), x)) {
        throw std::logic_error("Euclid witness divisible by a listed prime");
      }
    }
    ClassId q = factor(domain, x).front();
    return EuclidStep{std::move(q), std::move(x), m};
  }
  throw Error(ErrorCode::SizeGuard, "no nonunit among x_1 .. x_64");
}

std::vector<EuclidStep> prime_stream_steps(const Domain& domain, const PrimeList& start, unsigned count) {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  PrimeList list = start;
  std::vector<EuclidStep> steps;
  for (unsigned i = 0; i < count; ++i) {
    EuclidStep step = euclid_step(domain, list);
    list.members.push_back(step.prime);
    steps.push_back(std::move(step));
  }
  return steps;
}

PrimeList prime_stream(const Domain& domain, const PrimeList& start, unsigned count) {
  PrimeList list = start;
  for (auto& step : prime_stream_steps(domain, start, count)) list.members.push_back(std::move(step.prime));
  return list;
}

}  // namespace divtop
