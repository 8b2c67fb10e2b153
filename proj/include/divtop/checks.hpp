#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "divtop/fragment.hpp"

namespace divtop {

enum class Verdict { Holds, Fails, WitnessProduced };

/// "holds", "fails", "witness-produced".
std::string_view verdict_name(Verdict v);

/// A witness is a single class or a set of classes (a point set, listed).
using Witness = std::variant<ClassId, std::vector<ClassId>>;

/// Outcome of one theorem check. Fails always carries a witness; details
/// hold the oracle values the verdict rests on, in insertion order.
struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Holds;
  std::vector<Witness> witnesses;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

/// Any two distinct points are separated by a basic open.
CheckReport check_t0(const Fragment& fragment);

/// [a^2] lies in the closure of [a] and differs from it, so {[a]} is not
/// closed in D(R). Verified against every open of fragment({a^2}) when it is
/// small enough to enumerate, otherwise through the minimal open of [a^2].
CheckReport t1_failure_witness(const DomainPtr& domain, const ClassId& a);

/// Isolated points (U_p = {p}) against the irreducible filter. In a GCD
/// domain isolated points are also prime; elsewhere the report lists
/// irreducibles of the fragment that fail primality on fragment products.
CheckReport isolated_points(const Fragment& fragment);

/// Whether basic opens of fragment(seeds) are totally ordered by inclusion.
CheckReport check_nested(const DomainPtr& domain, std::span<const ClassId> seeds);

/// U_a ∩ U_b against U_gcd(a,b) (GCD domains), or whether the intersection
/// is a basic open at all (other rings).
CheckReport basis_intersection(const Domain& domain, const ClassId& a, const ClassId& b);

/// U_lcm(a,b) ⊆ U_c whenever a | c and b | c.
CheckReport lcm_containment(const Domain& domain, const ClassId& a, const ClassId& b, const ClassId& c);

/// Every sample's basic open meets the irreducibles. NotAtomic otherwise.
CheckReport density_check(const Domain& domain, std::span<const ClassId> samples);

/// Every dense open contains the isolated points and the intersection of
/// all dense opens is dense. Fragments up to 12 points.
CheckReport dense_open_check(const Fragment& fragment);

CheckReport ultraconnected_witness(const Domain& domain, const ClassId& a, const ClassId& b);

/// For pairwise non-associated irreducibles a, b, c: {[ab]} and {[ac]} are
/// separated, yet their minimal neighbourhoods share U_a.
CheckReport no_disjoint_nbhd_witness(const DomainPtr& domain, const ClassId& a, const ClassId& b,
                                     const ClassId& c);

CheckReport non_regular_witness(const DomainPtr& domain, const ClassId& a);

/// x^2 does not divide x; a finite family of point closures has the common
/// point [∏ a_i].
CheckReport non_compact_witness(const Domain& domain, const ClassId& x,
                                std::span<const ClassId> family = {});

/// Strictly ascending chain U_a ⊊ U_{a^2} ⊊ ... ⊊ U_{a^n}, n >= 2.
CheckReport noetherian_chain(const DomainPtr& domain, const ClassId& a, unsigned n);

/// The ⊆-maximal members among {U_p : p in subfamily}, in point order.
CheckReport maximal_basic_open(const Fragment& fragment, std::span<const ClassId> subfamily);

}  // namespace divtop
