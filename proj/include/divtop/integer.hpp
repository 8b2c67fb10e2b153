#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace divtop {

using BigInt = boost::multiprecision::cpp_int;

namespace integer {

/// Largest bound below which Miller-Rabin with the first thirteen prime bases
/// is a proof of primality. Factorization and primality refuse inputs at or
/// above it with SizeGuard.
const BigInt& deterministic_prime_bound();

/// Floor square root of a non-negative integer.
BigInt isqrt(const BigInt& n);

bool is_square(const BigInt& n);

/// Exact primality for 0 <= n < deterministic_prime_bound().
bool is_prime(const BigInt& n);

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;
};

/// Prime factorization of n >= 1, primes ascending. Trial division followed
/// by Pollard-Brent; deterministic for a given n.
std::vector<PrimePower> factorize(const BigInt& n);

/// All positive divisors of n >= 1, ascending.
std::vector<BigInt> divisors(const BigInt& n);

/// Non-negative solutions (x, y) of x^2 + k*y^2 = d by scanning y.
std::vector<std::pair<BigInt, BigInt>> represent_by_form(const BigInt& d, unsigned k);

/// x^e for small e.
BigInt pow(const BigInt& x, unsigned e);

}  // namespace integer
}  // namespace divtop
