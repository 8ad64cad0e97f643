#include "sqrtlab/split_primes.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sqrtlab/modular.hpp"
#include "sqrtlab/primes.hpp"

namespace sqrtlab {

const char* to_string(Splitting s) {
  switch (s) {
    case Splitting::split: return "split";
    case Splitting::inert: return "inert";
    case Splitting::ramified: return "ramified";
  }
  return "?";
}

Splitting is_split(std::uint64_t p, std::uint64_t q) {
  if (!is_prime(p)) throw DomainError("is_split: p must be prime");
  if (p == q) return Splitting::ramified;
  if (p == 2) {
    if (q % 4 == 1) return Splitting::ramified;
    return reduce(-static_cast<std::int64_t>(q), 8) == 1 ? Splitting::split : Splitting::inert;
  }
  return kronecker(-static_cast<std::int64_t>(q), static_cast<std::int64_t>(p)) == 1 ? Splitting::split
                                                                                       : Splitting::inert;
}

SplitCensus split_census(double P, std::uint64_t q) {
  SplitCensus c;
  if (P < 2.0) return c;
  for (std::uint64_t p : primes_up_to(static_cast<std::uint64_t>(std::floor(P)))) {
    ++c.primes;
    switch (is_split(p, q)) {
      case Splitting::split: ++c.split; break;
      case Splitting::inert: ++c.inert; break;
      case Splitting::ramified: ++c.ramified; break;
    }
  }
  return c;
}

std::int64_t count_split(double P, std::uint64_t q) { return split_census(P, q).split; }

std::uint64_t least_split_prime(std::uint64_t q) {
  if (q <= 3 || !is_prime(q)) throw DomainError("least_split_prime: need q prime, q > 3");
  for (std::uint64_t p = 2;; p = p == 2 ? 3 : p + 2) {
    if (is_prime(p) && kronecker(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)) == 1) return p;
  }
}

std::uint64_t least_nonresidue(std::uint64_t q) {
  if (q <= 3 || !is_prime(q)) throw DomainError("least_nonresidue: need q prime, q > 3");
  for (std::uint64_t n = 2;; ++n) {
    if (kronecker(static_cast<std::int64_t>(n), static_cast<std::int64_t>(q)) == -1) return n;
  }
}

std::uint64_t principal_form_value(std::uint64_t n, std::uint64_t q) {
  if (q % 16 != 3) throw DomainError("principal_form_value: needs q = 3 mod 16");
  if (n < 1) throw DomainError("principal_form_value: n must be positive");
  return n * n + n + (q + 1) / 4;
}

std::uint64_t theorem12_t(std::uint64_t q) { return isqrt(3 * q) / 2; }

double theorem12_bound(std::uint64_t q) {
  const double c = (2.0 - std::log(3.0 * std::sqrt(2.0))) / 2.0;
  return c * static_cast<double>(theorem12_t(q)) / std::log(static_cast<double>(q));
}

Theorem12Report theorem12_verify(std::uint64_t q) {
  if (q < 67 || q % 16 != 3 || !is_prime(q)) {
    throw DomainError("theorem12_verify: need q >= 67 prime with q = 3 mod 16");
  }
  Theorem12Report r;
  r.q = q;
  r.t = theorem12_t(q);
  r.bound = theorem12_bound(q);
  const std::uint64_t top = principal_form_value(r.t, q);
  const std::vector<std::uint64_t> sieve = primes_up_to(isqrt(top) + 1);
  std::set<std::uint64_t> found, big;
  for (std::uint64_t n = 1; n <= r.t; ++n) {
    const std::uint64_t v = principal_form_value(n, q);
    if (v % 2 == 0) r.all_odd = false;
    for (const PrimePower& pp : factorize(v, sieve)) (pp.p <= q ? found : big).insert(pp.p);
  }
  r.primes.assign(found.begin(), found.end());
  r.excluded.assign(big.begin(), big.end());
  for (std::uint64_t p : r.primes) {
    if (is_split(p, q) != Splitting::split) r.not_split.push_back(p);
  }
  r.omega = static_cast<std::int64_t>(r.primes.size());
  r.pass = r.not_split.empty() && static_cast<double>(r.omega) > r.bound;
  return r;
}

namespace {

std::uint64_t ipow(std::uint64_t p, int k) {
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 62) / p) throw DomainError("hensel: p^k exceeds 2^62");
    r *= p;
  }
  return r;
}

int ord(std::int64_t v, std::uint64_t p) { return padic_order(v, p); }

// Roots of P(x) = x^2 + x + (q+1)/4 modulo p^k, ascending: x = (s - 1)/2
// with s^2 = -q.
std::array<std::uint64_t, 2> form_roots(std::uint64_t p, std::uint64_t q, int k) {
  const std::uint64_t m = ipow(p, k);
  const std::array<std::uint64_t, 2> s = hensel_sqrt(reduce(-static_cast<std::int64_t>(q), m), p, k);
  const std::uint64_t half = (m + 1) / 2;  // inverse of 2 mod odd m
  std::array<std::uint64_t, 2> x{};
  for (int i = 0; i < 2; ++i) x[i] = mul_mod(reduce(static_cast<std::int64_t>(s[i]) - 1, m), half, m);
  std::sort(x.begin(), x.end());
  return x;
}

}  // namespace

std::array<std::uint64_t, 2> hensel_sqrt(std::uint64_t a, std::uint64_t p, int k) {
  if (p == 2 || !is_prime(p)) throw DomainError("hensel_sqrt: p must be an odd prime");
  if (k < 1) throw DomainError("hensel_sqrt: k must be positive");
  if (kronecker(static_cast<std::int64_t>(a % p), static_cast<std::int64_t>(p)) != 1) {
    throw DomainError("hensel_sqrt: a must be a nonzero square mod p");
  }
  std::uint64_t x = sqrt_mod(a % p, p)[0];
  std::uint64_t m = p;
  for (int i = 1; i < k; ++i) {
    m *= p;
    // Newton step x <- x - (x^2 - a) / (2x), valid because 2x is a unit.
    const std::uint64_t fx = (mul_mod(x, x, m) + m - a % m) % m;
    const std::uint64_t inv2x = inv_mod(static_cast<std::int64_t>(2 * x % m), m);
    x = (x + m - mul_mod(fx, inv2x, m)) % m;
  }
  std::array<std::uint64_t, 2> r{x, (m - x) % m};
  std::sort(r.begin(), r.end());
  return r;
}

int kappa(std::uint64_t p, std::uint64_t t) {
  int k = 1;
  while (ipow(p, k) <= t) ++k;
  return k;
}

OrdpCheck ordp_identity(std::uint64_t p, std::uint64_t q, std::uint64_t n) {
  if (p == 2 || is_split(p, q) != Splitting::split) throw DomainError("ordp_identity: p must be an odd split prime");
  OrdpCheck c;
  const std::uint64_t t = theorem12_t(q);
  c.kappa = kappa(p, t);
  const auto roots = form_roots(p, q, c.kappa);
  c.a_p = roots[0];
  c.b_p = roots[1];
  const std::uint64_t value = principal_form_value(n, q);
  c.lhs = ord(static_cast<std::int64_t>(value), p);
  std::array<std::uint64_t, 2> use = roots;
  if (n == c.a_p || n == c.b_p) {
    int K = 1;
    while (ipow(p, K) <= value) ++K;
    use = form_roots(p, q, K);
  }
  const auto in = static_cast<std::int64_t>(n);
  c.rhs = ord(in - static_cast<std::int64_t>(use[0]), p) + ord(in - static_cast<std::int64_t>(use[1]), p);
  c.holds = c.lhs == c.rhs;
  return c;
}

bool ordp_identity_check(std::uint64_t p, std::uint64_t q, std::uint64_t n) { return ordp_identity(p, q, n).holds; }

StirlingCheck stirling_check(std::uint64_t t) {
  if (t < 2) throw DomainError("stirling_check: t must be at least 2");
  StirlingCheck s;
  for (std::uint64_t k = 2; k < t; ++k) s.log_factorial += std::log(static_cast<long double>(k));
  const auto tl = static_cast<long double>(t);
  s.middle = (tl - 0.5L) * std::log(tl - 1.0L) - tl + 2.0L;
  s.right = tl * (std::log(tl) - 1.0L);
  s.holds = s.log_factorial <= s.middle && s.middle <= s.right;
  return s;
}

Theorem11Probe theorem11_probe(std::uint64_t q, double eps) {
  Theorem11Probe r;
  r.q = q;
  const double qd = static_cast<double>(q);
  r.P = std::min(std::pow(qd, 0.5 + eps), qd);
  r.count = count_split(r.P, q);
  r.envelope = std::min(std::sqrt(r.P) * std::pow(qd, -eps / 2.0), r.P * std::pow(qd, -0.25 - 2.0 * eps / 3.0));
  r.ratio = static_cast<double>(r.count) / r.envelope;
  return r;
}

}  // namespace sqrtlab
