#include "divtop/fragment.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace divtop {

Fragment Fragment::build(DomainPtr domain, std::span<const ClassId> seeds) {
  if (!domain) throw Error(ErrorCode::InvalidArgument, "fragment needs a domain");
  if (seeds.empty()) throw Error(ErrorCode::InvalidArgument, "fragment needs at least one seed");
  const RingTag tag = domain->descriptor().tag;
  std::set<ClassId> collected;
  for (const auto& seed : seeds) {
    if (seed.tag() != tag) throw Error(ErrorCode::RingMismatch, "seed from a different ring");
    domain->check_member(seed.rep());
    for (auto& d : divisor_classes(*domain, seed.rep())) {
      collected.insert(std::move(d));
      if (collected.size() > kMaxFragmentPoints) {
        throw Error(ErrorCode::FragmentTooLarge,
                    "fragment exceeds " + std::to_string(kMaxFragmentPoints) + " points");
      }
    }
  }

  Fragment f;
  f.domain_ = std::move(domain);
  f.tag_ = tag;
  f.points_.assign(collected.begin(), collected.end());
  for (const auto& s : seeds) {
    if (std::find(f.seeds_.begin(), f.seeds_.end(), s) == f.seeds_.end()) f.seeds_.push_back(s);
  }
  for (std::size_t i = 0; i < f.points_.size(); ++i) f.index_.emplace(f.points_[i], i);

  // Column j holds the in-fragment divisors of points[j]; divisor closure
  // guarantees every divisor class is a point.
  const std::size_t n = f.points_.size();
  f.divisors_.assign(n, Bitset(n));
  f.multiples_.assign(n, Bitset(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& d : divisor_classes(*f.domain_, f.points_[j].rep())) {
      const std::size_t i = f.index_.at(d);
      f.divisors_[j].set(i);
      f.multiples_[i].set(j);
    }
  }
  return f;
}

std::optional<std::size_t> Fragment::index_of(const ClassId& p) const {
  if (auto it = index_.find(p); it != index_.end()) return it->second;
  return std::nullopt;
}

std::size_t Fragment::require_index(const ClassId& p) const {
  if (auto i = index_of(p)) return *i;
  throw Error(ErrorCode::PointNotInFragment, "class is not a point of the fragment");
}

PointSet::PointSet(const Fragment& fragment, Bitset bits) : fragment_(&fragment), bits_(std::move(bits)) {
  if (bits_.size() != fragment.size()) {
    throw Error(ErrorCode::InvalidArgument, "bitset length differs from fragment size");
  }
}

PointSet PointSet::full(const Fragment& fragment) {
  PointSet s(fragment);
  s.bits_.set();
  return s;
}

PointSet PointSet::of(const Fragment& fragment, std::span<const ClassId> members) {
  PointSet s(fragment);
  for (const auto& m : members) s.bits_.set(fragment.require_index(m));
  return s;
}

bool PointSet::contains(const ClassId& p) const {
  auto i = fragment_->index_of(p);
  return i && bits_.test(*i);
}

std::vector<ClassId> PointSet::members() const {
  std::vector<ClassId> out;
  for (auto i = bits_.find_first(); i != Bitset::npos; i = bits_.find_next(i)) {
    out.push_back(fragment_->point(i));
  }
  return out;
}

void PointSet::require_same(const PointSet& other) const {
  if (fragment_ != other.fragment_) {
    throw Error(ErrorCode::OwnershipMismatch, "point sets belong to different fragments");
  }
}

bool PointSet::is_subset_of(const PointSet& other) const {
  require_same(other);
  return bits_.is_subset_of(other.bits_);
}

PointSet PointSet::complement() const { return PointSet(*fragment_, ~bits_); }

PointSet PointSet::operator&(const PointSet& other) const {
  require_same(other);
  return PointSet(*fragment_, bits_ & other.bits_);
}

PointSet PointSet::operator|(const PointSet& other) const {
  require_same(other);
  return PointSet(*fragment_, bits_ | other.bits_);
}

namespace {

void require_owned(const Fragment& fragment, const PointSet& s) {
  if (&s.fragment() != &fragment) {
    throw Error(ErrorCode::OwnershipMismatch, "point set belongs to another fragment");
  }
}

}  // namespace

Fragment build_fragment(DomainPtr domain, std::span<const ClassId> seeds) {
  return Fragment::build(std::move(domain), seeds);
}

PointSet basic_open(const Fragment& fragment, const ClassId& p) {
  return PointSet(fragment, fragment.divisors_of(fragment.require_index(p)));
}

bool is_open(const Fragment& fragment, const PointSet& s) {
  require_owned(fragment, s);
  const Bitset& bits = s.bits();
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    if (!fragment.divisors_of(i).is_subset_of(bits)) return false;
  }
  return true;
}

bool is_closed(const Fragment& fragment, const PointSet& s) {
  require_owned(fragment, s);
  const Bitset& bits = s.bits();
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    if (!fragment.multiples_of(i).is_subset_of(bits)) return false;
  }
  return true;
}

PointSet closure(const Fragment& fragment, const PointSet& s) {
  require_owned(fragment, s);
  Bitset out(fragment.size());
  const Bitset& bits = s.bits();
  for (auto i = bits.find_first(); i != Bitset::npos; i = bits.find_next(i)) {
    out |= fragment.multiples_of(i);
  }
  return PointSet(fragment, std::move(out));
}

PointSet minimal_open(const Fragment& fragment, const ClassId& p) { return basic_open(fragment, p); }

bool specializes(const Fragment& fragment, const ClassId& p, const ClassId& q) {
  return fragment.divides(fragment.require_index(p), fragment.require_index(q));
}

std::size_t for_each_open(const Fragment& fragment, const std::function<bool(const PointSet&)>& visit,
                          std::optional<std::size_t> cap) {
  const std::size_t n = fragment.size();
  if (n > kMaxEnumerationPoints) {
    throw Error(ErrorCode::FragmentTooLargeForEnumeration,
                "open-set enumeration limited to " + std::to_string(kMaxEnumerationPoints) + " points");
  }
  // A proper divisor has a strictly smaller basic open, so ordering by basic
  // open size is a linear extension: divisors are decided before multiples.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fragment.divisors_of(a).count() < fragment.divisors_of(b).count();
  });

  std::size_t visited = 0;
  bool stop = false;
  PointSet current(fragment);
  // Every partial choice extends to a down-set (exclusion is always allowed),
  // so the search has no dead ends.
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == n) {
      ++visited;
      if (!visit(current) || (cap && visited >= *cap)) stop = true;
      return;
    }
    const std::size_t v = order[depth];
    descend(depth + 1);
    if (stop) return;
    Bitset below = fragment.divisors_of(v);
    below.reset(v);
    if (below.is_subset_of(current.bits())) {
      current.insert(v);
      descend(depth + 1);
      current.erase(v);
    }
  };
  if (!cap || *cap > 0) descend(0);
  return visited;
}

std::vector<PointSet> enumerate_opens(const Fragment& fragment, std::optional<std::size_t> cap) {
  std::vector<PointSet> out;
  for_each_open(
      fragment,
      [&](const PointSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  return out;
}

}  // namespace divtop
