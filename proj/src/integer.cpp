#include "divtop/integer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "divtop/error.hpp"

namespace divtop::integer {

namespace mp = boost::multiprecision;

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::array<unsigned, 13> kWitnessBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
constexpr unsigned kTrialLimit = 1000;

bool fits_u64(const BigInt& n) { return n >= 0 && mp::msb(n | 1) < 63; }

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool miller_rabin_u64(u64 n) {
  if (n < 2) return false;
  for (unsigned p : kWitnessBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kWitnessBases) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool miller_rabin_big(const BigInt& n) {
  for (unsigned p : kWitnessBases) {
    if (n % p == 0) return n == p;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kWitnessBases) {
    BigInt x = mp::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's cycle detection with batched gcds. Returns a nontrivial factor of
// the odd composite n, trying successive constants c.
u64 pollard_brent_u64(u64 n) {
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, q = 1, g = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

BigInt pollard_brent_big(const BigInt& n) {
  for (unsigned c = 1;; ++c) {
    BigInt y = 2, x = 2, q = 1, g = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = q * (x > y ? x - y : y - x) % n;
        }
        g = mp::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = mp::gcd(x > ys ? BigInt(x - ys) : BigInt(ys - x), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const BigInt& n, std::vector<BigInt>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  BigInt d = fits_u64(n) ? BigInt(pollard_brent_u64(static_cast<u64>(n))) : pollard_brent_big(n);
  split_into(d, primes);
  split_into(n / d, primes);
}

}  // namespace

const BigInt& deterministic_prime_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "isqrt of negative integer");
  return mp::sqrt(n);
}

bool is_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = mp::sqrt(n);
  return r * r == n;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (n >= deterministic_prime_bound()) {
    throw Error(ErrorCode::SizeGuard, "primality beyond deterministic bound: " + n.str());
  }
  if (fits_u64(n)) return miller_rabin_u64(static_cast<u64>(n));
  return miller_rabin_big(n);
}

std::vector<PrimePower> factorize(const BigInt& n_in) {
  if (n_in < 1) throw Error(ErrorCode::InvalidArgument, "factorize expects n >= 1");
  if (n_in >= deterministic_prime_bound()) {
    throw Error(ErrorCode::SizeGuard, "factorization beyond deterministic bound: " + n_in.str());
  }
  BigInt n = n_in;
  std::vector<BigInt> primes;
  for (unsigned p = 2; p <= kTrialLimit && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  split_into(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    BigInt power = 1;
    for (unsigned k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<BigInt, BigInt>> represent_by_form(const BigInt& d, unsigned k) {
  std::vector<std::pair<BigInt, BigInt>> out;
  if (d < 0 || k == 0) return out;
  if (fits_u64(d)) {
    const u64 dd = static_cast<u64>(d);
    for (u64 y = 0; static_cast<u128>(k) * y * y <= dd; ++y) {
      const u64 rest = dd - static_cast<u64>(k) * y * y;
      u64 x = static_cast<u64>(std::sqrt(static_cast<long double>(rest)));
      while (x > 0 && static_cast<u128>(x) * x > rest) --x;
      while (static_cast<u128>(x + 1) * (x + 1) <= rest) ++x;
      if (static_cast<u128>(x) * x == rest) out.emplace_back(BigInt(x), BigInt(y));
    }
    return out;
  }
  for (BigInt y = 0; k * y * y <= d; ++y) {
    BigInt rest = d - k * y * y;
    BigInt x = mp::sqrt(rest);
    if (x * x == rest) out.emplace_back(x, y);
  }
  return out;
}

BigInt pow(const BigInt& x, unsigned e) { return mp::pow(x, e); }

}  // namespace divtop::integer
