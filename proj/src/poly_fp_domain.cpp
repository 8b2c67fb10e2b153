#include <algorithm>
#include <map>

#include "divtop/domain.hpp"

namespace divtop {

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Trial division never enumerates more candidate divisors than a degree-12
// input over F_17 needs: all monic polynomials of degree 1..6.
constexpr std::uint64_t kTrialBudget = 17ull + 289 + 4913 + 83521 + 1419857 + 24137569;
constexpr int kMaxFactorDegree = 64;

class PolyFpDomain final : public Domain {
 public:
  explicit PolyFpDomain(std::uint32_t p) : p_(p) {
    if (p < 2 || p > 17 || !integer::is_prime(p)) {
      throw Error(ErrorCode::InvalidArgument, "POLY_FP modulus must be a prime <= 17");
    }
    inverse_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) {
      for (std::uint32_t b = 1; b < p; ++b) {
        if (a * b % p == 1) inverse_[a] = b;
      }
    }
  }

  RingDescriptor descriptor() const override { return {RingTag::PolyFp, p_}; }

  AdapterCapabilities capabilities() const override {
    return {.has_gcd = true, .is_valuation = false, .is_atomic = true, .is_ufd = true,
            .unit_count = UnitCount::Finite, .finite_unit_count = p_ - 1};
  }

  void check_member(const RingElement& e) const override {
    const auto& v = e.as<PolyFpValue>();
    if (v.modulus != p_) {
      throw Error(ErrorCode::RingMismatch, "polynomial over F_" + std::to_string(v.modulus) +
                                               " used in F_" + std::to_string(p_) + "[x]");
    }
    if (!v.coeffs.empty() && v.coeffs.back() == 0) {
      throw Error(ErrorCode::InvalidArgument, "polynomial has a trailing zero coefficient");
    }
  }

  bool is_zero(const RingElement& e) const override { return get(e).empty(); }
  bool is_unit(const RingElement& e) const override { return get(e).size() == 1; }
  RingElement one() const override { return wrap({1}); }

  RingElement multiply(const RingElement& a, const RingElement& b) const override {
    return wrap(mul(get(a), get(b)));
  }

  RingElement add(const RingElement& a, const RingElement& b) const override {
    Coeffs x = get(a);
    const Coeffs& y = get(b);
    if (x.size() < y.size()) x.resize(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) x[i] = (x[i] + y[i]) % p_;
    trim(x);
    return wrap(std::move(x));
  }

  RingElement normal_form(const RingElement& e) const override { return wrap(monic(get(e))); }

  bool divides_nonzero(const RingElement& a, const RingElement& b) const override {
    return divmod(get(b), get(a)).second.empty();
  }

  RingElement exact_quotient(const RingElement& b, const RingElement& a) const override {
    auto [q, r] = divmod(get(b), get(a));
    if (!r.empty()) throw Error(ErrorCode::InvalidArgument, "inexact polynomial quotient");
    return wrap(std::move(q));
  }

  std::vector<RingElement> nonunit_divisors(const RingElement& a) const override {
    std::map<Coeffs, unsigned> powers;
    for (auto& f : trial_factor(get(a))) ++powers[f];
    std::vector<Coeffs> divs{{1}};
    for (const auto& [f, e] : powers) {
      const std::size_t base = divs.size();
      Coeffs power{1};
      for (unsigned k = 1; k <= e; ++k) {
        power = mul(power, f);
        for (std::size_t i = 0; i < base; ++i) divs.push_back(mul(divs[i], power));
      }
    }
    std::vector<RingElement> out;
    for (auto& d : divs) {
      if (d.size() > 1) out.push_back(wrap(std::move(d)));
    }
    sort_elements(out);
    return out;
  }

  bool irreducible_nonunit(const RingElement& a) const override {
    return trial_factor(get(a)).size() == 1;
  }

  std::vector<RingElement> factor_nonunit(const RingElement& a) const override {
    std::vector<RingElement> out;
    for (auto& f : trial_factor(get(a))) out.push_back(wrap(std::move(f)));
    return out;
  }

  RingElement gcd_nonzero(const RingElement& a, const RingElement& b) const override {
    Coeffs x = get(a), y = get(b);
    while (!y.empty()) {
      Coeffs r = divmod(x, y).second;
      x = std::move(y);
      y = std::move(r);
    }
    return wrap(monic(x));
  }

 private:
  const Coeffs& get(const RingElement& e) const { return e.as<PolyFpValue>().coeffs; }

  RingElement wrap(Coeffs c) const { return RingElement(PolyFpValue{std::move(c), p_}); }

  static void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  static void sort_elements(std::vector<RingElement>& v) {
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return compare_elements(l, r) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  Coeffs mul(const Coeffs& a, const Coeffs& b) const {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p_;
    }
    trim(out);
    return out;
  }

  Coeffs monic(Coeffs c) const {
    const std::uint32_t inv = inverse_[c.back()];
    for (auto& x : c) x = x * inv % p_;
    return c;
  }

  std::pair<Coeffs, Coeffs> divmod(Coeffs num, const Coeffs& den) const {
    if (den.size() > num.size()) return {{}, std::move(num)};
    const std::uint32_t inv = inverse_[den.back()];
    Coeffs q(num.size() - den.size() + 1, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
      const std::uint32_t c = num[k + den.size() - 1] * inv % p_;
      q[k] = c;
      if (c == 0) continue;
      for (std::size_t j = 0; j < den.size(); ++j) {
        num[k + j] = (num[k + j] + (p_ - c) * den[j]) % p_;
      }
    }
    num.resize(den.size() - 1);
    trim(num);
    trim(q);
    return {std::move(q), std::move(num)};
  }

  // Monic irreducible factors by trial division over monic candidates of
  // increasing degree; candidates within a degree run in the point order.
  std::vector<Coeffs> trial_factor(const Coeffs& a) const {
    if (static_cast<int>(a.size()) - 1 > kMaxFactorDegree) {
      throw Error(ErrorCode::SizeGuard, "POLY_FP factorization limited to degree " +
                                            std::to_string(kMaxFactorDegree));
    }
    std::vector<Coeffs> factors;
    Coeffs rest = monic(a);
    std::uint64_t spent = 0;
    for (std::size_t d = 1; 2 * d < rest.size(); ++d) {
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= p_;
      if (spent + count > kTrialBudget) {
        throw Error(ErrorCode::SizeGuard, "POLY_FP trial division budget exceeded");
      }
      spent += count;
      Coeffs cand(d + 1, 0);
      cand[d] = 1;
      for (std::uint64_t n = 0; n < count && 2 * d < rest.size(); ++n) {
        // cand coefficients below the leading one encode n in base p,
        // most significant digit at degree d - 1
        std::uint64_t m = n;
        for (std::size_t i = 0; i < d; ++i) {
          cand[i] = static_cast<std::uint32_t>(m % p_);
          m /= p_;
        }
        while (cand.size() <= rest.size()) {
          auto [q, r] = divmod(rest, cand);
          if (!r.empty()) break;
          factors.push_back(cand);
          rest = std::move(q);
        }
      }
    }
    if (rest.size() > 1) factors.push_back(rest);
    return factors;
  }

  std::uint32_t p_;
  std::vector<std::uint32_t> inverse_;
};

}  // namespace

DomainPtr make_poly_fp_domain(std::uint32_t prime) { return std::make_shared<PolyFpDomain>(prime); }

}  // namespace divtop
