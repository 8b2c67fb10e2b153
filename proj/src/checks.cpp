#include "divtop/checks.hpp"

#include <algorithm>
#include <set>

#include "divtop/text.hpp"

namespace divtop {

using nlohmann::ordered_json;

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::WitnessProduced: return "witness-produced";
  }
  return "?";
}

namespace {

ordered_json texts(std::span<const ClassId> classes) {
  ordered_json out = ordered_json::array();
  for (const auto& c : classes) out.push_back(to_text(c));
  return out;
}

ordered_json texts(const PointSet& s) { return texts(s.members()); }

std::string open_label(const ClassId& c) { return "U_" + to_text(c); }

Fragment single_seed_fragment(const DomainPtr& domain, const ClassId& seed) {
  const ClassId seeds[] = {seed};
  return build_fragment(domain, seeds);
}

// A fails verdict never leaves without a witness.
void fail_with(CheckReport& r, Witness w) {
  r.verdict = Verdict::Fails;
  r.witnesses.push_back(std::move(w));
}

}  // namespace

CheckReport check_t0(const Fragment& fragment) {
  CheckReport r;
  r.check = "t0";
  const std::size_t n = fragment.size();
  std::size_t pairs = 0;
  ordered_json example = nullptr;
  for (std::size_t i = 0; i < n && r.verdict == Verdict::Holds; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++pairs;
      // U_i contains j iff j | i, so U_i separates unless j divides i.
      std::optional<std::size_t> separator;
      if (!fragment.divides(j, i)) {
        separator = i;
      } else if (!fragment.divides(i, j)) {
        separator = j;
      }
      if (!separator) {
        fail_with(r, std::vector<ClassId>{fragment.point(i), fragment.point(j)});
        r.details["inseparable"] = {to_text(fragment.point(i)), to_text(fragment.point(j))};
        break;
      }
      if (example.is_null()) {
        example = {{"pair", {to_text(fragment.point(i)), to_text(fragment.point(j))}},
                   {"separator", open_label(fragment.point(*separator))}};
      }
    }
  }
  r.details["points"] = n;
  r.details["pairs_checked"] = pairs;
  r.details["example"] = example;
  return r;
}

CheckReport t1_failure_witness(const DomainPtr& domain, const ClassId& a) {
  CheckReport r;
  r.check = "t1";
  const ClassId square = mul_class(*domain, a, a);
  const Fragment frag = single_seed_fragment(domain, square);
  const std::size_t ia = frag.require_index(a);
  const std::size_t isq = frag.require_index(square);
  const bool in_closure = closure(frag, PointSet::of(frag, std::span(&a, 1))).test(isq);
  bool every_open_ok = true;
  std::size_t opens_checked = 0;
  std::string route;
  if (frag.size() <= kMaxEnumerationPoints) {
    route = "enumeration";
    for_each_open(frag, [&](const PointSet& o) {
      ++opens_checked;
      if (o.test(isq) && !o.test(ia)) every_open_ok = false;
      return every_open_ok;
    });
  } else {
    route = "minimal-open";
    every_open_ok = minimal_open(frag, square).test(ia);
  }
  r.witnesses = {a, square};
  r.details["pair"] = {to_text(a), to_text(square)};
  r.details["square_in_closure"] = in_closure;
  r.details["distinct"] = square != a;
  r.details["route"] = route;
  r.details["opens_checked"] = opens_checked;
  r.details["every_open_with_square_contains_a"] = every_open_ok;
  r.details["scope"] = "witness in D(R)";
  r.verdict = (in_closure && every_open_ok && square != a) ? Verdict::WitnessProduced : Verdict::Fails;
  return r;
}

CheckReport isolated_points(const Fragment& fragment) {
  CheckReport r;
  r.check = "isolated";
  const Domain& domain = fragment.domain();
  std::vector<ClassId> isolated, irreducible;
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    if (fragment.divisors_of(i).count() == 1) isolated.push_back(fragment.point(i));
    if (is_irreducible(domain, fragment.point(i).rep())) irreducible.push_back(fragment.point(i));
  }
  r.details["isolated"] = texts(isolated);
  r.details["irreducible"] = texts(irreducible);
  r.witnesses.assign(isolated.begin(), isolated.end());
  if (isolated != irreducible) {
    std::vector<ClassId> diff;
    std::set_symmetric_difference(isolated.begin(), isolated.end(), irreducible.begin(), irreducible.end(),
                                  std::back_inserter(diff));
    fail_with(r, diff);
  }

  // Primality of isolated points, tested on products of fragment points.
  constexpr std::size_t kPrimeClauseLimit = 64;
  const bool gcd_domain = domain.capabilities().has_gcd;
  r.details["gcd_domain"] = gcd_domain;
  if (fragment.size() > kPrimeClauseLimit) {
    r.details["prime_clause"] = "skipped";
    return r;
  }
  ordered_json non_prime = ordered_json::array();
  for (const auto& q : isolated) {
    bool found = false;
    for (std::size_t i = 0; i < fragment.size() && !found; ++i) {
      if (divides(domain, q.rep(), fragment.point(i).rep())) continue;
      for (std::size_t j = i; j < fragment.size() && !found; ++j) {
        if (divides(domain, q.rep(), fragment.point(j).rep())) continue;
        const RingElement product = domain.multiply(fragment.point(i).rep(), fragment.point(j).rep());
        if (divides(domain, q.rep(), product)) {
          non_prime.push_back({{"irreducible", to_text(q)},
                               {"factors", {to_text(fragment.point(i)), to_text(fragment.point(j))}}});
          if (gcd_domain) fail_with(r, q);
          found = true;
        }
      }
    }
  }
  r.details["prime_clause"] = "checked";
  r.details["non_prime_irreducibles"] = non_prime;
  return r;
}

CheckReport check_nested(const DomainPtr& domain, std::span<const ClassId> seeds) {
  CheckReport r;
  r.check = "nested";
  const Fragment frag = build_fragment(domain, seeds);
  r.details["points"] = frag.size();
  r.details["adapter_is_valuation"] = domain->capabilities().is_valuation;
  for (std::size_t i = 0; i < frag.size(); ++i) {
    for (std::size_t j = i + 1; j < frag.size(); ++j) {
      const Bitset& ui = frag.divisors_of(i);
      const Bitset& uj = frag.divisors_of(j);
      if (!ui.is_subset_of(uj) && !uj.is_subset_of(ui)) {
        r.verdict = Verdict::Fails;
        r.witnesses = {frag.point(i), frag.point(j)};
        r.details["incomparable"] = {open_label(frag.point(i)), open_label(frag.point(j))};
        return r;
      }
    }
  }
  return r;
}

CheckReport basis_intersection(const Domain& domain, const ClassId& a, const ClassId& b) {
  CheckReport r;
  r.check = "gcd-intersection";
  if (a.tag() != b.tag()) throw Error(ErrorCode::RingMismatch, "classes from different rings");
  const auto da = divisor_classes(domain, a.rep());
  const auto db = divisor_classes(domain, b.rep());
  std::vector<ClassId> common;
  std::set_intersection(da.begin(), da.end(), db.begin(), db.end(), std::back_inserter(common));
  r.details["pair"] = {to_text(a), to_text(b)};
  r.details["intersection"] = texts(common);

  if (domain.capabilities().has_gcd) {
    const auto g = gcd_class(domain, a.rep(), b.rep());
    bool law = false;
    if (!g) {
      law = common.empty();
      r.details["gcd"] = nullptr;
    } else {
      law = common == divisor_classes(domain, g->rep());
      r.details["gcd"] = to_text(*g);
    }
    r.details["basic"] = true;
    r.details["gcd_law"] = law;
    if (!law) fail_with(r, common);
    return r;
  }

  if (common.empty()) {
    r.details["basic"] = true;
    r.details["generator"] = nullptr;
    return r;
  }
  for (const auto& g : common) {
    if (divisor_classes(domain, g.rep()) == common) {
      r.details["basic"] = true;
      r.details["generator"] = to_text(g);
      return r;
    }
  }
  r.details["basic"] = false;
  r.verdict = Verdict::WitnessProduced;
  r.witnesses.push_back(common);
  return r;
}

CheckReport lcm_containment(const Domain& domain, const ClassId& a, const ClassId& b, const ClassId& c) {
  CheckReport r;
  r.check = "lcm-containment";
  const bool common_multiple = divides(domain, a.rep(), c.rep()) && divides(domain, b.rep(), c.rep());
  const ClassId l = lcm_class(domain, a.rep(), b.rep());
  r.details["triple"] = {to_text(a), to_text(b), to_text(c)};
  r.details["lcm"] = to_text(l);
  r.details["common_multiple"] = common_multiple;
  if (!common_multiple) return r;
  const auto ul = divisor_classes(domain, l.rep());
  const auto uc = divisor_classes(domain, c.rep());
  const bool contained = std::includes(uc.begin(), uc.end(), ul.begin(), ul.end());
  r.details["contained"] = contained;
  if (!contained) fail_with(r, l);
  return r;
}

CheckReport density_check(const Domain& domain, std::span<const ClassId> samples) {
  if (!domain.capabilities().is_atomic) {
    throw Error(ErrorCode::NotAtomic, "density check needs an atomic domain");
  }
  CheckReport r;
  r.check = "density";
  constexpr std::size_t kListed = 32;
  ordered_json hits = ordered_json::array();
  for (const auto& a : samples) {
    const auto factors = factor(domain, a.rep());
    const ClassId& q = factors.front();
    const bool ok = is_irreducible(domain, q.rep()) && divides(domain, q.rep(), a.rep());
    if (!ok) {
      fail_with(r, a);
      continue;
    }
    if (hits.size() < kListed) hits.push_back({to_text(a), to_text(q)});
  }
  r.details["samples"] = samples.size();
  r.details["hits"] = hits;
  return r;
}

CheckReport dense_open_check(const Fragment& fragment) {
  constexpr std::size_t kMaxPoints = 12;
  if (fragment.size() > kMaxPoints) {
    throw Error(ErrorCode::FragmentTooLargeForEnumeration, "dense-open check limited to 12 points");
  }
  CheckReport r;
  r.check = "dense-open";
  PointSet isolated(fragment);
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    if (fragment.divisors_of(i).count() == 1) isolated.insert(i);
  }
  const PointSet full = PointSet::full(fragment);
  PointSet meet = full;
  std::size_t opens = 0, dense = 0;
  for_each_open(fragment, [&](const PointSet& o) {
    ++opens;
    if (closure(fragment, o) == full) {
      ++dense;
      meet = meet & o;
      if (!isolated.is_subset_of(o)) fail_with(r, o.members());
    }
    return true;
  });
  const bool meet_dense = closure(fragment, meet) == full;
  if (!meet_dense) fail_with(r, meet.members());
  r.details["opens"] = opens;
  r.details["dense_opens"] = dense;
  r.details["isolated"] = texts(isolated);
  r.details["intersection"] = texts(meet);
  r.details["intersection_dense"] = meet_dense;
  return r;
}

CheckReport ultraconnected_witness(const Domain& domain, const ClassId& a, const ClassId& b) {
  CheckReport r;
  r.check = "ultra";
  const ClassId ab = mul_class(domain, a, b);
  const bool da = divides(domain, a.rep(), ab.rep());
  const bool db = divides(domain, b.rep(), ab.rep());
  r.witnesses = {ab};
  r.details["pair"] = {to_text(a), to_text(b)};
  r.details["product"] = to_text(ab);
  r.details["in_closure_of_first"] = da;
  r.details["in_closure_of_second"] = db;
  r.verdict = (da && db) ? Verdict::WitnessProduced : Verdict::Fails;
  return r;
}

CheckReport no_disjoint_nbhd_witness(const DomainPtr& domain, const ClassId& a, const ClassId& b,
                                     const ClassId& c) {
  const ClassId inputs[] = {a, b, c};
  for (const auto& x : inputs) {
    if (x.tag() != a.tag()) throw Error(ErrorCode::RingMismatch, "classes from different rings");
    if (!is_irreducible(*domain, x.rep())) {
      throw Error(ErrorCode::NotIrreducible, to_text(x) + " is not irreducible");
    }
  }
  if (a == b || a == c || b == c) throw Error(ErrorCode::AssociatedInputs, "inputs must be non-associated");

  CheckReport r;
  r.check = "sep-nbhd";
  const ClassId ab = mul_class(*domain, a, b);
  const ClassId ac = mul_class(*domain, a, c);
  const ClassId seeds[] = {ab, ac};
  const Fragment frag = build_fragment(domain, seeds);
  const std::size_t iab = frag.require_index(ab), iac = frag.require_index(ac);
  const bool separated = !closure(frag, PointSet::of(frag, std::span(&ab, 1))).test(iac) &&
                         !closure(frag, PointSet::of(frag, std::span(&ac, 1))).test(iab);
  const PointSet meet = minimal_open(frag, ab) & minimal_open(frag, ac);
  const PointSet ua = basic_open(frag, a);
  const bool shares = ua.is_subset_of(meet) && meet.contains(a);
  r.witnesses = {ab, ac, a};
  r.details["pair"] = {to_text(ab), to_text(ac)};
  r.details["separated"] = separated;
  r.details["neighbourhood_intersection"] = texts(meet);
  r.details["contains"] = open_label(a);
  r.verdict = (separated && shares) ? Verdict::WitnessProduced : Verdict::Fails;
  return r;
}

CheckReport non_regular_witness(const DomainPtr& domain, const ClassId& a) {
  CheckReport r;
  r.check = "regular";
  const ClassId square = mul_class(*domain, a, a);
  const Fragment frag = single_seed_fragment(domain, square);
  const PointSet cl = closure(frag, PointSet::of(frag, std::span(&a, 1)));
  const bool not_closed = cl.contains(square) && square != a;
  r.witnesses = {a, square};
  r.details["point"] = to_text(a);
  r.details["fragment_seed"] = to_text(square);
  r.details["closure"] = texts(cl);
  r.details["singleton_closed"] = !not_closed;
  r.details["scope"] = "witness in D(R)";
  r.verdict = not_closed ? Verdict::WitnessProduced : Verdict::Fails;
  return r;
}

CheckReport non_compact_witness(const Domain& domain, const ClassId& x, std::span<const ClassId> family) {
  CheckReport r;
  r.check = "compact";
  const ClassId square = mul_class(domain, x, x);
  const bool square_divides = divides(domain, square.rep(), x.rep());
  r.witnesses = {x, square};
  r.details["point"] = to_text(x);
  r.details["square"] = to_text(square);
  r.details["square_divides_point"] = square_divides;
  bool fip = true;
  if (!family.empty()) {
    ClassId common = family.front();
    for (std::size_t i = 1; i < family.size(); ++i) common = mul_class(domain, common, family[i]);
    for (const auto& f : family) fip = fip && divides(domain, f.rep(), common.rep());
    r.details["family"] = texts(family);
    r.details["common_point"] = to_text(common);
    r.witnesses.push_back(common);
  }
  r.details["finite_intersection_property"] = fip;
  r.verdict = (!square_divides && fip) ? Verdict::WitnessProduced : Verdict::Fails;
  return r;
}

CheckReport noetherian_chain(const DomainPtr& domain, const ClassId& a, unsigned n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "chain length must be at least 2");
  CheckReport r;
  r.check = "chain";
  std::vector<ClassId> powers{a};
  for (unsigned k = 2; k <= n; ++k) powers.push_back(mul_class(*domain, powers.back(), a));
  std::optional<Fragment> frag;
  try {
    frag = single_seed_fragment(domain, powers.back());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::FragmentTooLarge) throw Error(ErrorCode::SizeGuard, e.what());
    throw;
  }
  ordered_json labels = ordered_json::array(), sizes = ordered_json::array();
  bool strict = true;
  std::size_t previous = 0;
  for (std::size_t k = 0; k < powers.size(); ++k) {
    const std::size_t size = basic_open(*frag, powers[k]).count();
    labels.push_back(open_label(powers[k]));
    sizes.push_back(size);
    if (k > 0) {
      strict = strict && size > previous && !divides(*domain, powers[k].rep(), powers[k - 1].rep());
    }
    previous = size;
  }
  r.witnesses.push_back(powers);
  r.details["chain"] = labels;
  r.details["sizes"] = sizes;
  r.details["strict"] = strict;
  r.verdict = strict ? Verdict::WitnessProduced : Verdict::Fails;
  return r;
}

CheckReport maximal_basic_open(const Fragment& fragment, std::span<const ClassId> subfamily) {
  if (subfamily.empty()) throw Error(ErrorCode::EmptyFamily, "subfamily is empty");
  CheckReport r;
  r.check = "maximal";
  std::set<std::size_t> members;
  for (const auto& p : subfamily) members.insert(fragment.require_index(p));
  std::vector<ClassId> maximal;
  for (std::size_t i : members) {
    bool dominated = false;
    for (std::size_t j : members) {
      if (j != i && fragment.divisors_of(i).is_subset_of(fragment.divisors_of(j))) dominated = true;
    }
    if (!dominated) maximal.push_back(fragment.point(i));
  }
  ordered_json labels = ordered_json::array();
  for (const auto& m : maximal) labels.push_back(open_label(m));
  r.details["family_size"] = members.size();
  r.details["maximal"] = labels;
  r.witnesses.assign(maximal.begin(), maximal.end());
  if (maximal.empty()) {
    r.verdict = Verdict::Fails;
    r.witnesses.push_back(std::vector<ClassId>(subfamily.begin(), subfamily.end()));
  }
  return r;
}

}  // namespace divtop
