#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "sqrtlab/errors.hpp"

namespace sqrtlab {

using Complex = std::complex<double>;

// ---------------------------------------------------------------------------
// Word-size modular arithmetic.  Products go through unsigned __int128, so any
// modulus below 2^63 is safe.
// ---------------------------------------------------------------------------

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const std::uint64_t s = a + b;  // a, b < m < 2^63
  return s >= m ? s - m : s;
}

/// Representative of a in [0, m).
inline std::uint64_t reduce(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  const std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % m;  // avoids INT64_MIN overflow
  return m - 1 - r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Integer square root: largest r with r*r <= n.
std::uint64_t isqrt(std::uint64_t n);

/// Full Kronecker symbol (a/n).  Throws DomainError for n == 0.
int kronecker(std::int64_t a, std::int64_t n);

/// Multiplicative inverse in [1, q-1].  Throws DomainError when gcd(a, q) != 1.
std::uint64_t inv_mod(std::int64_t a, std::uint64_t q);

/// The square roots of a residue: zero, one ({0}) or two elements, ascending.
struct RootSet {
  std::uint32_t count = 0;
  std::array<std::uint64_t, 2> roots{};

  std::size_t size() const { return count; }
  bool empty() const { return count == 0; }
  const std::uint64_t* begin() const { return roots.data(); }
  const std::uint64_t* end() const { return roots.data() + count; }
  std::uint64_t operator[](std::size_t i) const { return roots[i]; }
};

/// Tonelli-Shanks square roots of a modulo the odd prime q.
RootSet sqrt_mod(std::uint64_t a, std::uint64_t q);

/// 1 when q = 1 mod 4, i when q = 3 mod 4.
Complex eps_q(std::uint64_t q);

/// exp(2 pi i x / q), with x reduced modulo q before the angle is formed.
Complex e_q(std::int64_t x, std::uint64_t q);

/// Odd prime modulus with optional residue tables.
///
/// Below `table_threshold` the constructor fills Legendre, inverse, root and
/// unit-circle tables so that the O(q)..O(q^2) sweeps never call
/// Tonelli-Shanks or sin/cos in their inner loops.  Immutable afterwards.
class PrimeField {
 public:
  static constexpr std::uint64_t kDefaultTableThreshold = std::uint64_t{1} << 22;

  explicit PrimeField(std::uint64_t q, std::uint64_t table_threshold = kDefaultTableThreshold);

  std::uint64_t q() const { return q_; }
  bool has_tables() const { return !legendre_.empty(); }

  std::uint64_t reduce(std::int64_t a) const { return sqrtlab::reduce(a, q_); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_mod(a, b, q_); }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + q_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, q_); }

  int legendre(std::uint64_t a) const;
  std::uint64_t inv(std::uint64_t a) const;
  RootSet sqrt(std::uint64_t a) const;

  /// e_q(r) for a reduced residue r.
  Complex unit(std::uint64_t r) const;

  /// Structure-of-arrays unit circle table (cos, sin of 2 pi k / q); only
  /// populated when has_tables().
  const std::vector<double>& unit_re() const { return cos_; }
  const std::vector<double>& unit_im() const { return sin_; }

 private:
  std::uint64_t q_;
  std::vector<std::int8_t> legendre_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> root_;  // smaller root, or kNoRoot
  std::vector<double> cos_;
  std::vector<double> sin_;

  static constexpr std::uint32_t kNoRoot = 0xffffffffu;
};

}  // namespace sqrtlab
