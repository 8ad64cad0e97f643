#pragma once

// Brute-force references that share no code path with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

inline Complex e(std::int64_t x, std::int64_t q) {
  const std::int64_t r = ((x % q) + q) % q;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(q));
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Legendre symbol by scanning squares.
inline int legendre(std::int64_t a, std::int64_t q) {
  const std::int64_t r = ((a % q) + q) % q;
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < q; ++x) {
    if (x * x % q == r) return 1;
  }
  return -1;
}

inline std::vector<std::int64_t> roots(std::int64_t a, std::int64_t q) {
  const std::int64_t r = ((a % q) + q) % q;
  std::vector<std::int64_t> out;
  for (std::int64_t x = 0; x < q; ++x) {
    if (x * x % q == r) out.push_back(x);
  }
  return out;
}

inline std::int64_t inverse(std::int64_t a, std::int64_t q) {
  const std::int64_t r = ((a % q) + q) % q;
  for (std::int64_t x = 1; x < q; ++x) {
    if (x * r % q == 1) return x;
  }
  return 0;
}

inline Complex gauss(std::int64_t a, std::int64_t b, std::int64_t q) {
  Complex s = 0.0;
  for (std::int64_t x = 0; x < q; ++x) s += e(a * x * x + b * x, q);
  return s;
}

inline Complex salie(std::int64_t m, std::int64_t n, std::int64_t q) {
  Complex s = 0.0;
  for (std::int64_t x = 1; x < q; ++x) s += static_cast<double>(legendre(x, q)) * e(m * x + n * inverse(x, q), q);
  return s;
}

}  // namespace oracle
