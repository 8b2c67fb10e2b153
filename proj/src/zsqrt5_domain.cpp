#include <algorithm>
#include <map>
#include <set>

#include "divtop/domain.hpp"

namespace divtop {

namespace {

struct Quad {
  BigInt x;
  BigInt y;
};

BigInt norm(const Quad& z) { return z.x * z.x + 5 * z.y * z.y; }

Quad mul(const Quad& a, const Quad& b) { return {a.x * b.x - 5 * a.y * b.y, a.x * b.y + a.y * b.x}; }

Quad normalize(const Quad& z) {
  if (z.x > 0 || (z.x == 0 && z.y > 0)) return z;
  return {-z.x, -z.y};
}

std::optional<Quad> quotient(const Quad& b, const Quad& a) {
  const BigInt n = norm(a);
  const BigInt re = b.x * a.x + 5 * b.y * a.y;
  const BigInt im = b.y * a.x - b.x * a.y;
  if (re % n != 0 || im % n != 0) return std::nullopt;
  return Quad{re / n, im / n};
}

// Norm representation x^2 + 5y^2 = d is scanned over y, so candidate norms
// above this bound are refused.
const BigInt& candidate_norm_bound() {
  static const BigInt bound("1000000000000");
  return bound;
}

bool less(const Quad& a, const Quad& b) {
  return compare_elements(RingElement::zsqrt_m5(a.x, a.y), RingElement::zsqrt_m5(b.x, b.y)) < 0;
}

// Z[sqrt(-5)] has class number 2, so the principal ideal of an irreducible is
// a principal prime or a product of two non-principal primes: its norm is p,
// p^2 or p*q for rational primes dividing the norm of any multiple. Every
// nonunit divisor of a therefore has a divisor whose norm lies in this set.
std::vector<BigInt> irreducible_norm_candidates(const BigInt& n) {
  const auto fac = integer::factorize(n);
  std::set<BigInt> out;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    out.insert(fac[i].prime);
    if (fac[i].exponent >= 2) out.insert(fac[i].prime * fac[i].prime);
    for (std::size_t j = i + 1; j < fac.size(); ++j) out.insert(fac[i].prime * fac[j].prime);
  }
  return {out.begin(), out.end()};
}

std::vector<Quad> canonical_elements_of_norm(const BigInt& d) {
  if (d > candidate_norm_bound()) {
    throw Error(ErrorCode::SizeGuard, "ZSQRT_M5 norm representation limited to 10^12");
  }
  std::vector<Quad> out;
  for (const auto& [x, y] : integer::represent_by_form(d, 5)) {
    if (x == 0) {
      out.push_back({0, y});
    } else {
      out.push_back({x, y});
      if (y != 0) out.push_back({x, -y});
    }
  }
  std::sort(out.begin(), out.end(), less);
  return out;
}

// Proper nonunit divisors of a whose norm is an irreducible-norm candidate,
// sorted by the point order. Including a itself when asked.
std::vector<Quad> small_divisors(const Quad& a, bool include_self) {
  const BigInt n = norm(a);
  std::vector<Quad> out;
  for (const auto& d : irreducible_norm_candidates(n)) {
    if (n % d != 0 || (!include_self && d == n)) continue;
    for (const auto& b : canonical_elements_of_norm(d)) {
      if (quotient(a, b)) out.push_back(b);
    }
  }
  std::sort(out.begin(), out.end(), less);
  return out;
}

class ZSqrtM5Domain final : public Domain {
 public:
  RingDescriptor descriptor() const override { return {RingTag::ZSqrtM5, std::nullopt}; }

  AdapterCapabilities capabilities() const override {
    return {.has_gcd = false, .is_valuation = false, .is_atomic = true, .is_ufd = false,
            .unit_count = UnitCount::Finite, .finite_unit_count = 2};
  }

  void check_member(const RingElement& e) const override { (void)e.as<ZSqrtM5Value>(); }

  bool is_zero(const RingElement& e) const override { return norm(get(e)) == 0; }
  bool is_unit(const RingElement& e) const override { return norm(get(e)) == 1; }
  RingElement one() const override { return RingElement::zsqrt_m5(1, 0); }

  RingElement multiply(const RingElement& a, const RingElement& b) const override {
    return wrap(mul(get(a), get(b)));
  }
  RingElement add(const RingElement& a, const RingElement& b) const override {
    const Quad l = get(a), r = get(b);
    return wrap({l.x + r.x, l.y + r.y});
  }

  RingElement normal_form(const RingElement& e) const override { return wrap(normalize(get(e))); }

  bool divides_nonzero(const RingElement& a, const RingElement& b) const override {
    return quotient(get(b), get(a)).has_value();
  }

  RingElement exact_quotient(const RingElement& b, const RingElement& a) const override {
    auto q = quotient(get(b), get(a));
    if (!q) throw Error(ErrorCode::InvalidArgument, "inexact ZSQRT_M5 quotient");
    return wrap(*q);
  }

  std::vector<RingElement> nonunit_divisors(const RingElement& a) const override {
    std::map<std::pair<BigInt, BigInt>, std::vector<Quad>> memo;
    std::vector<Quad> found = divisors_rec(normalize(get(a)), memo);
    std::vector<RingElement> out;
    for (const auto& q : found) out.push_back(wrap(q));
    return out;
  }

  bool irreducible_nonunit(const RingElement& a) const override {
    return small_divisors(normalize(get(a)), false).empty();
  }

  std::vector<RingElement> factor_nonunit(const RingElement& a) const override {
    std::vector<RingElement> out;
    Quad rest = normalize(get(a));
    while (norm(rest) != 1) {
      auto proper = small_divisors(rest, false);
      if (proper.empty()) {
        out.push_back(wrap(rest));
        break;
      }
      // the smallest-norm proper divisor is irreducible
      const Quad q = proper.front();
      out.push_back(wrap(q));
      rest = normalize(*quotient(rest, q));
    }
    return out;
  }

  RingElement gcd_nonzero(const RingElement&, const RingElement&) const override {
    throw Error(ErrorCode::CapabilityMissing, "ZSQRT_M5 is not a GCD domain");
  }

 private:
  static Quad get(const RingElement& e) {
    const auto& v = e.as<ZSqrtM5Value>();
    return {v.x, v.y};
  }
  static RingElement wrap(const Quad& q) { return RingElement::zsqrt_m5(q.x, q.y); }

  // Every nonunit divisor of a is b * c with b | a, N(b) a candidate norm,
  // and c a unit or a nonunit divisor of a / b.
  static const std::vector<Quad>& divisors_rec(
      const Quad& a, std::map<std::pair<BigInt, BigInt>, std::vector<Quad>>& memo) {
    const auto key = std::make_pair(a.x, a.y);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<Quad> out;
    for (const auto& b : small_divisors(a, true)) {
      out.push_back(b);
      const Quad rest = normalize(*quotient(a, b));
      if (norm(rest) == 1) continue;
      for (const auto& c : divisors_rec(rest, memo)) out.push_back(normalize(mul(b, c)));
    }
    std::sort(out.begin(), out.end(), less);
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Quad& l, const Quad& r) { return l.x == r.x && l.y == r.y; }),
              out.end());
    return memo.emplace(key, std::move(out)).first->second;
  }
};

}  // namespace

DomainPtr make_zsqrt_m5_domain() {
  static const DomainPtr instance = std::make_shared<ZSqrtM5Domain>();
  return instance;
}

}  // namespace divtop
