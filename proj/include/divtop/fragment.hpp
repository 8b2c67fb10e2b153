#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "divtop/domain.hpp"

namespace divtop {

using Bitset = boost::dynamic_bitset<>;

inline constexpr std::size_t kMaxFragmentPoints = 4096;
inline constexpr std::size_t kMaxEnumerationPoints = 20;

/// Finite divisor-closed set of classes of one ring together with its
/// divisibility matrix. Immutable once built.
class Fragment {
 public:
  /// Union of the divisor classes of the seeds. FragmentTooLarge above
  /// kMaxFragmentPoints points.
  static Fragment build(DomainPtr domain, std::span<const ClassId> seeds);

  const Domain& domain() const { return *domain_; }
  const DomainPtr& domain_ptr() const { return domain_; }
  RingTag tag() const { return tag_; }

  const std::vector<ClassId>& points() const { return points_; }
  const std::vector<ClassId>& seeds() const { return seeds_; }
  std::size_t size() const { return points_.size(); }
  const ClassId& point(std::size_t i) const { return points_[i]; }

  std::optional<std::size_t> index_of(const ClassId& p) const;
  /// PointNotInFragment when absent.
  std::size_t require_index(const ClassId& p) const;

  /// points[i] divides points[j].
  bool divides(std::size_t i, std::size_t j) const { return divisors_[j].test(i); }
  /// Column j of the matrix: in-fragment divisors of points[j] (U restricted).
  const Bitset& divisors_of(std::size_t j) const { return divisors_[j]; }
  /// Row i of the matrix: in-fragment multiples of points[i].
  const Bitset& multiples_of(std::size_t i) const { return multiples_[i]; }

 private:
  Fragment() = default;

  DomainPtr domain_;
  RingTag tag_ = RingTag::Int;
  std::vector<ClassId> points_;
  std::vector<ClassId> seeds_;
  std::vector<Bitset> divisors_;
  std::vector<Bitset> multiples_;
  std::map<ClassId, std::size_t> index_;
};

/// Subset of a fragment's points. Refers to its fragment, which must outlive it.
class PointSet {
 public:
  explicit PointSet(const Fragment& fragment) : fragment_(&fragment), bits_(fragment.size()) {}
  PointSet(const Fragment& fragment, Bitset bits);

  static PointSet full(const Fragment& fragment);
  /// PointNotInFragment if any member is missing.
  static PointSet of(const Fragment& fragment, std::span<const ClassId> members);

  const Fragment& fragment() const { return *fragment_; }
  const Bitset& bits() const { return bits_; }

  bool test(std::size_t i) const { return bits_.test(i); }
  bool contains(const ClassId& p) const;
  void insert(std::size_t i) { bits_.set(i); }
  void erase(std::size_t i) { bits_.reset(i); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  std::vector<ClassId> members() const;

  bool is_subset_of(const PointSet& other) const;
  PointSet complement() const;
  PointSet operator&(const PointSet& other) const;
  PointSet operator|(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) {
    return a.fragment_ == b.fragment_ && a.bits_ == b.bits_;
  }

 private:
  void require_same(const PointSet& other) const;

  const Fragment* fragment_;
  Bitset bits_;
};

Fragment build_fragment(DomainPtr domain, std::span<const ClassId> seeds);

/// U_p restricted to the fragment.
PointSet basic_open(const Fragment& fragment, const ClassId& p);
/// Closed under in-fragment divisors.
bool is_open(const Fragment& fragment, const PointSet& s);
/// Closed under in-fragment multiples.
bool is_closed(const Fragment& fragment, const PointSet& s);
/// In-fragment multiples of members of s.
PointSet closure(const Fragment& fragment, const PointSet& s);
/// Smallest open set containing p; equal to basic_open.
PointSet minimal_open(const Fragment& fragment, const ClassId& p);
/// q lies in the closure of {p}, i.e. p divides q.
bool specializes(const Fragment& fragment, const ClassId& p, const ClassId& q);

/// Visits every open (down-set) of the fragment exactly once, starting with
/// the empty set. The visitor returns false to stop; at most `cap` sets are
/// visited when given. Returns the number visited.
/// FragmentTooLargeForEnumeration above kMaxEnumerationPoints points.
std::size_t for_each_open(const Fragment& fragment, const std::function<bool(const PointSet&)>& visit,
                          std::optional<std::size_t> cap = std::nullopt);

std::vector<PointSet> enumerate_opens(const Fragment& fragment,
                                      std::optional<std::size_t> cap = std::nullopt);

}  // namespace divtop
