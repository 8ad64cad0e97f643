#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sqrtlab {

/// All primes <= limit, ascending (segmented sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

struct PrimePower {
  std::uint64_t p;
  int e;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Trial division by the given ascending prime list, which must reach
/// isqrt(n); the leftover cofactor is prime.
std::vector<PrimePower> factorize(std::uint64_t n, std::span<const std::uint64_t> primes);

/// Trial division with a private prime list.  Intended for n < 2^40.
std::vector<PrimePower> factorize(std::uint64_t n);

/// p-adic valuation of a nonzero integer.
int padic_order(std::int64_t n, std::uint64_t p);

/// log p when k = p^e, otherwise 0.
double von_mangoldt(std::uint64_t k);

}  // namespace sqrtlab
