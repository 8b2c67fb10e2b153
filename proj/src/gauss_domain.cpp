#include <algorithm>

#include "divtop/domain.hpp"

namespace divtop {

namespace {

namespace mp = boost::multiprecision;

struct Gaussian {
  BigInt re;
  BigInt im;
};

BigInt norm(const Gaussian& z) { return z.re * z.re + z.im * z.im; }

Gaussian mul(const Gaussian& a, const Gaussian& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// Nearest integer to n / d for d > 0.
BigInt round_div(const BigInt& n, const BigInt& d) {
  BigInt num = 2 * n + d;
  BigInt den = 2 * d;
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

Gaussian normalize(const Gaussian& z) {
  Gaussian w = z;
  for (int k = 0; k < 4; ++k) {
    if (w.re > 0 && w.im >= 0) return w;
    w = {-w.im, w.re};  // multiply by i
  }
  return z;
}

// b / a when exact.
std::optional<Gaussian> quotient(const Gaussian& b, const Gaussian& a) {
  const BigInt n = norm(a);
  const Gaussian num = mul(b, {a.re, -a.im});
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return Gaussian{num.re / n, num.im / n};
}

// x + yi with x^2 + y^2 = p for a prime p = 1 mod 4 (Cornacchia).
Gaussian split_prime(const BigInt& p) {
  BigInt c = 2;
  const BigInt half = (p - 1) / 2;
  while (mp::powm(c, half, p) != p - 1) ++c;
  BigInt t = mp::powm(c, (p - 1) / 4, p);
  BigInt r0 = p, r1 = t;
  const BigInt root = mp::sqrt(p);
  while (r1 > root) {
    BigInt r2 = r0 % r1;
    r0 = r1;
    r1 = r2;
  }
  BigInt y = mp::sqrt(BigInt(p - r1 * r1));
  return normalize({r1, y});
}

struct GaussPrimePower {
  Gaussian prime;
  unsigned exponent;
};

class GaussDomain final : public Domain {
 public:
  RingDescriptor descriptor() const override { return {RingTag::Gauss, std::nullopt}; }

  AdapterCapabilities capabilities() const override {
    return {.has_gcd = true, .is_valuation = false, .is_atomic = true, .is_ufd = true,
            .unit_count = UnitCount::Finite, .finite_unit_count = 4};
  }

  void check_member(const RingElement& e) const override { (void)e.as<GaussValue>(); }

  bool is_zero(const RingElement& e) const override { return norm(get(e)) == 0; }
  bool is_unit(const RingElement& e) const override { return norm(get(e)) == 1; }
  RingElement one() const override { return RingElement::gaussian(1, 0); }

  RingElement multiply(const RingElement& a, const RingElement& b) const override {
    return wrap(mul(get(a), get(b)));
  }
  RingElement add(const RingElement& a, const RingElement& b) const override {
    const auto x = get(a), y = get(b);
    return wrap({x.re + y.re, x.im + y.im});
  }

  RingElement normal_form(const RingElement& e) const override { return wrap(normalize(get(e))); }

  bool divides_nonzero(const RingElement& a, const RingElement& b) const override {
    return quotient(get(b), get(a)).has_value();
  }

  RingElement exact_quotient(const RingElement& b, const RingElement& a) const override {
    auto q = quotient(get(b), get(a));
    if (!q) throw Error(ErrorCode::InvalidArgument, "inexact Gaussian quotient");
    return wrap(*q);
  }

  std::vector<RingElement> nonunit_divisors(const RingElement& a) const override {
    std::vector<Gaussian> divs{{1, 0}};
    for (const auto& [prime, e] : prime_powers(get(a))) {
      const std::size_t base = divs.size();
      Gaussian power{1, 0};
      for (unsigned k = 1; k <= e; ++k) {
        power = mul(power, prime);
        for (std::size_t i = 0; i < base; ++i) divs.push_back(mul(divs[i], power));
      }
    }
    std::vector<RingElement> out;
    for (const auto& d : divs) {
      if (norm(d) != 1) out.push_back(wrap(normalize(d)));
    }
    sort_unique(out);
    return out;
  }

  bool irreducible_nonunit(const RingElement& a) const override {
    const BigInt n = norm(get(a));
    if (integer::is_prime(n)) return true;
    BigInt r = mp::sqrt(n);
    return r * r == n && r % 4 == 3 && integer::is_prime(r);
  }

  std::vector<RingElement> factor_nonunit(const RingElement& a) const override {
    std::vector<RingElement> out;
    for (const auto& [prime, e] : prime_powers(get(a))) {
      for (unsigned k = 0; k < e; ++k) out.push_back(wrap(prime));
    }
    return out;
  }

  RingElement gcd_nonzero(const RingElement& a, const RingElement& b) const override {
    Gaussian x = get(a), y = get(b);
    while (norm(y) != 0) {
      const BigInt n = norm(y);
      const Gaussian num = mul(x, {y.re, -y.im});
      const Gaussian q{round_div(num.re, n), round_div(num.im, n)};
      const Gaussian qy = mul(q, y);
      Gaussian r{x.re - qy.re, x.im - qy.im};
      x = y;
      y = r;
    }
    return wrap(normalize(x));
  }

 private:
  static Gaussian get(const RingElement& e) {
    const auto& v = e.as<GaussValue>();
    return {v.re, v.im};
  }
  static RingElement wrap(const Gaussian& z) { return RingElement::gaussian(z.re, z.im); }

  static void sort_unique(std::vector<RingElement>& v) {
    std::sort(v.begin(), v.end(), [](const auto& l, const auto& r) { return compare_elements(l, r) < 0; });
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  // Gaussian prime factorization read off the rational factorization of the
  // norm; split primes are resolved by trial division of the running cofactor.
  static std::vector<GaussPrimePower> prime_powers(const Gaussian& z) {
    std::vector<GaussPrimePower> out;
    Gaussian rest = z;
    auto strip = [&](const Gaussian& prime, unsigned max_count) {
      unsigned count = 0;
      while (count < max_count) {
        auto q = quotient(rest, prime);
        if (!q) break;
        rest = *q;
        ++count;
      }
      if (count > 0) out.push_back({prime, count});
      return count;
    };
    for (const auto& [p, e] : integer::factorize(norm(z))) {
      if (p == 2) {
        strip({1, 1}, e);
      } else if (p % 4 == 3) {
        strip({p, 0}, e / 2);
      } else {
        const Gaussian pi = split_prime(p);
        const Gaussian conj = normalize({pi.re, -pi.im});
        const unsigned first = strip(pi, e);
        strip(conj, e - first);
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
      return compare_elements(wrap(l.prime), wrap(r.prime)) < 0;
    });
    return out;
  }
};

}  // namespace

DomainPtr make_gauss_domain() {
  static const DomainPtr instance = std::make_shared<GaussDomain>();
  return instance;
}

}  // namespace divtop
