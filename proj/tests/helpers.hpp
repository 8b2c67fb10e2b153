#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "divtop/io.hpp"

namespace divtop::testing {

inline RingElement elem(const Domain& d, const std::string& text) {
  return parse_element(d.descriptor(), text);
}

inline ClassId cls(const Domain& d, const std::string& text) { return canonical_class(d, elem(d, text)); }

inline std::vector<ClassId> classes(const Domain& d, const std::vector<std::string>& texts) {
  std::vector<ClassId> out;
  for (const auto& t : texts) out.push_back(cls(d, t));
  return out;
}

inline std::vector<std::string> texts(const std::vector<ClassId>& cs) {
  std::vector<std::string> out;
  for (const auto& c : cs) out.push_back(to_text(c));
  return out;
}

inline std::set<std::string> text_set(const std::vector<ClassId>& cs) {
  auto t = texts(cs);
  return {t.begin(), t.end()};
}

inline Fragment frag(const DomainPtr& d, const std::vector<std::string>& seeds) {
  const auto s = classes(*d, seeds);
  return build_fragment(d, s);
}

inline std::set<std::string> members(const PointSet& s) { return text_set(s.members()); }

// All 2^n subsets of a small fragment.
inline std::vector<PointSet> all_subsets(const Fragment& f) {
  std::vector<PointSet> out;
  const std::size_t n = f.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    PointSet s(f);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.insert(i);
    }
    out.push_back(s);
  }
  return out;
}

// Down-set test straight from the definition, using the ring's divides.
inline bool is_down_set_oracle(const Fragment& f, const PointSet& s) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (!s.test(j)) continue;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (!s.test(i) && divides(f.domain(), f.point(i).rep(), f.point(j).rep())) return false;
    }
  }
  return true;
}

}  // namespace divtop::testing
