#include "sqrtlab/modular.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace sqrtlab {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1u) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  const int s = std::countr_zero(d);
  d >>= s;
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

// Jacobi symbol (a/n) for odd n > 0 and 0 <= a < n.
int jacobi(std::uint64_t a, std::uint64_t n) {
  int t = 1;
  while (a != 0) {
    const int v = std::countr_zero(a);
    a >>= v;
    if ((v & 1) && (n % 8 == 3 || n % 8 == 5)) t = -t;
    if (a % 4 == 3 && n % 4 == 3) t = -t;
    std::uint64_t r = n % a;
    n = a;
    a = r;
  }
  return n == 1 ? t : 0;
}

}  // namespace

int kronecker(std::int64_t a, std::int64_t n) {
  if (n == 0) throw DomainError("kronecker: n must be nonzero");
  int t = 1;
  std::uint64_t un;
  if (n < 0) {
    un = static_cast<std::uint64_t>(-(n + 1)) + 1;
    if (a < 0) t = -t;
  } else {
    un = static_cast<std::uint64_t>(n);
  }
  const int v = std::countr_zero(un);
  if (v > 0) {
    if ((a & 1) == 0) return 0;
    const std::uint64_t a8 = reduce(a, 8);
    if ((v & 1) && (a8 == 3 || a8 == 5)) t = -t;
    un >>= v;
  }
  if (un == 1) return t;
  return t * jacobi(reduce(a, un), un);
}

std::uint64_t inv_mod(std::int64_t a, std::uint64_t q) {
  const std::uint64_t r = reduce(a, q);
  if (r == 0) throw DomainError("inv_mod: residue is not invertible");
  // Extended Euclid on signed 128-bit to keep the cofactors exact.
  __int128 old_r = r, cur_r = q;
  __int128 old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const __int128 quot = old_r / cur_r;
    __int128 tmp = old_r - quot * cur_r;
    old_r = cur_r;
    cur_r = tmp;
    tmp = old_s - quot * cur_s;
    old_s = cur_s;
    cur_s = tmp;
  }
  if (old_r != 1) throw DomainError("inv_mod: gcd(a, q) != 1");
  __int128 s = old_s % static_cast<__int128>(q);
  if (s < 0) s += q;
  return static_cast<std::uint64_t>(s);
}

RootSet sqrt_mod(std::uint64_t a, std::uint64_t q) {
  RootSet out;
  a %= q;
  if (a == 0) {
    out.count = 1;
    out.roots[0] = 0;
    return out;
  }
  if (q == 2) {
    out.count = 1;
    out.roots[0] = 1;
    return out;
  }
  if (jacobi(a, q) != 1) return out;

  std::uint64_t root;
  if (q % 4 == 3) {
    root = pow_mod(a, (q + 1) / 4, q);
  } else {
    std::uint64_t odd = q - 1;
    const int s = std::countr_zero(odd);
    odd >>= s;
    std::uint64_t z = 2;
    while (jacobi(z, q) != -1) ++z;
    std::uint64_t c = pow_mod(z, odd, q);
    std::uint64_t t = pow_mod(a, odd, q);
    root = pow_mod(a, (odd + 1) / 2, q);
    int m = s;
    while (t != 1) {
      int i = 0;
      std::uint64_t t2 = t;
      while (t2 != 1) {
        t2 = mul_mod(t2, t2, q);
        ++i;
      }
      std::uint64_t b = c;
      for (int k = 0; k < m - i - 1; ++k) b = mul_mod(b, b, q);
      root = mul_mod(root, b, q);
      c = mul_mod(b, b, q);
      t = mul_mod(t, c, q);
      m = i;
    }
  }
  const std::uint64_t other = q - root;
  out.count = 2;
  out.roots[0] = std::min(root, other);
  out.roots[1] = std::max(root, other);
  return out;
}

Complex eps_q(std::uint64_t q) {
  return q % 4 == 1 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
}

namespace {

Complex unit_of_reduced(std::uint64_t r, std::uint64_t q) {
  // Use the representative in (-q/2, q/2] so the angle stays small.
  const double num = r > q / 2 ? -static_cast<double>(q - r) : static_cast<double>(r);
  const double angle = 2.0 * std::numbers::pi * num / static_cast<double>(q);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Complex e_q(std::int64_t x, std::uint64_t q) {
  if (q == 0) throw DomainError("e_q: modulus must be positive");
  return unit_of_reduced(reduce(x, q), q);
}

PrimeField::PrimeField(std::uint64_t q, std::uint64_t table_threshold) : q_(q) {
  if (q < 3 || q % 2 == 0 || q >= (std::uint64_t{1} << 62) || !is_prime(q)) {
    throw DomainError("PrimeField: modulus " + std::to_string(q) + " is not an odd prime below 2^62");
  }
  if (q >= table_threshold) return;

  legendre_.assign(q, -1);
  legendre_[0] = 0;
  root_.assign(q, kNoRoot);
  root_[0] = 0;
  for (std::uint64_t x = 1; x <= (q - 1) / 2; ++x) {
    const std::uint64_t sq = mul_mod(x, x, q);
    legendre_[sq] = 1;
    root_[sq] = static_cast<std::uint32_t>(x);
  }
  inverse_.assign(q, 0);
  inverse_[1] = 1;
  for (std::uint64_t i = 2; i < q; ++i) {
    // inv(i) = -(q / i) * inv(q mod i)
    inverse_[i] = static_cast<std::uint32_t>(q - mul_mod(q / i, inverse_[q % i], q));
  }
  cos_.resize(q);
  sin_.resize(q);
  for (std::uint64_t k = 0; k < q; ++k) {
    const Complex z = unit_of_reduced(k, q);
    cos_[k] = z.real();
    sin_[k] = z.imag();
  }
}

int PrimeField::legendre(std::uint64_t a) const {
  a %= q_;
  if (has_tables()) return legendre_[a];
  return jacobi(a, q_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  a %= q_;
  if (a == 0) throw DomainError("PrimeField::inv: zero has no inverse");
  if (has_tables()) return inverse_[a];
  return inv_mod(static_cast<std::int64_t>(a), q_);
}

RootSet PrimeField::sqrt(std::uint64_t a) const {
  a %= q_;
  if (!has_tables()) return sqrt_mod(a, q_);
  RootSet out;
  if (a == 0) {
    out.count = 1;
    return out;
  }
  const std::uint32_t r = root_[a];
  if (r == kNoRoot) return out;
  out.count = 2;
  out.roots[0] = r;
  out.roots[1] = q_ - r;
  return out;
}

Complex PrimeField::unit(std::uint64_t r) const {
  if (has_tables()) return {cos_[r], sin_[r]};
  return unit_of_reduced(r % q_, q_);
}

}  // namespace sqrtlab
