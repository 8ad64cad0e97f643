#include "sqrtlab/primes.hpp"

#include <algorithm>
#include <cmath>

#include "sqrtlab/errors.hpp"
#include "sqrtlab/modular.hpp"

namespace sqrtlab {

namespace {

constexpr std::uint64_t kSegment = 1u << 16;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  const std::vector<std::uint64_t> base = small_primes(isqrt(hi));
  std::vector<char> mark(kSegment);
  for (std::uint64_t seg = lo; seg <= hi; seg += kSegment) {
    const std::uint64_t seg_end = std::min(hi, seg + kSegment - 1);
    std::fill(mark.begin(), mark.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > seg_end) break;
      std::uint64_t start = std::max(p * p, (seg + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_end; j += p) mark[j - seg] = 0;
    }
    for (std::uint64_t n = seg; n <= seg_end; ++n) {
      if (mark[n - seg]) out.push_back(n);
    }
    if (seg_end == hi) break;
  }
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) { return primes_in_range(2, limit); }

std::vector<PrimePower> factorize(std::uint64_t n, std::span<const std::uint64_t> primes) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  std::vector<PrimePower> out;
  for (std::uint64_t p : primes) {
    if (p * p > n) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) {
    const std::uint64_t reach = primes.empty() ? 1 : primes.back();
    if (reach * reach < n && !is_prime(n)) {
      throw DomainError("factorize: prime list too short for the cofactor");
    }
    out.push_back({n, 1});
  }
  return out;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: zero has no factorization");
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int padic_order(std::int64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("padic_order: zero has infinite valuation");
  std::uint64_t m = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1 : static_cast<std::uint64_t>(n);
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return e;
}

double von_mangoldt(std::uint64_t k) {
  if (k < 2) return 0.0;
  const auto f = factorize(k);
  return f.size() == 1 ? std::log(static_cast<double>(f.front().p)) : 0.0;
}

}  // namespace sqrtlab
