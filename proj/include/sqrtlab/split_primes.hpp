#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace sqrtlab {

enum class Splitting { split, inert, ramified };

const char* to_string(Splitting s);

/// Behaviour of the prime p in Q(sqrt(-q)).  p = q ramifies, and so does
/// p = 2 when q = 1 (mod 4) (the field discriminant is then -4q).  Otherwise
/// p splits iff (-q / p) = 1, which for p = 2 means -q = 1 (mod 8).
Splitting is_split(std::uint64_t p, std::uint64_t q);

/// N_q(P) = #{p <= P prime : p splits}.
std::int64_t count_split(double P, std::uint64_t q);

struct SplitCensus {
  std::int64_t split = 0;
  std::int64_t inert = 0;
  std::int64_t ramified = 0;
  std::int64_t primes = 0;  // pi(P)
};

SplitCensus split_census(double P, std::uint64_t q);

/// Least prime p with (p / q) = 1, and least n with (n / q) = -1.
std::uint64_t least_split_prime(std::uint64_t q);
std::uint64_t least_nonresidue(std::uint64_t q);

/// n^2 + n + (q + 1)/4, so that 4 P(n) = (2n + 1)^2 + q.  Needs q = 3 (mod 16).
std::uint64_t principal_form_value(std::uint64_t n, std::uint64_t q);

/// floor(sqrt(3q) / 2).
std::uint64_t theorem12_t(std::uint64_t q);

/// (2 - log(3 sqrt 2)) / 2 * t / log q.
double theorem12_bound(std::uint64_t q);

struct Theorem12Report {
  std::uint64_t q = 0;
  std::uint64_t t = 0;
  std::vector<std::uint64_t> primes;        // distinct prime factors p <= q
  std::vector<std::uint64_t> excluded;      // prime factors p > q
  std::vector<std::uint64_t> not_split;     // should stay empty
  std::int64_t omega = 0;
  double bound = 0.0;
  bool all_odd = true;  // ord_2 P(n) = 0 for every n <= t
  bool pass = false;    // not_split empty and omega > bound
};

Theorem12Report theorem12_verify(std::uint64_t q);

/// The two square roots of a modulo p^k, ascending.  Needs p odd prime and
/// (a / p) = 1.
std::array<std::uint64_t, 2> hensel_sqrt(std::uint64_t a, std::uint64_t p, int k);

/// Least kappa >= 1 with p^kappa > t, so that n - a has p-adic order below
/// kappa for every 1 <= n <= t other than a itself, for any 0 <= a < p^kappa.
int kappa(std::uint64_t p, std::uint64_t t);

struct OrdpCheck {
  int kappa = 0;
  std::uint64_t a_p = 0;  // roots of P mod p^kappa, a_p < b_p
  std::uint64_t b_p = 0;
  int lhs = 0;  // ord_p P(n)
  int rhs = 0;  // ord_p(n - a_p) + ord_p(n - b_p)
  bool holds = false;
};

/// ord_p P(n) against ord_p(n - a_p) + ord_p(n - b_p), with a_p, b_p the
/// roots of P modulo p^kappa.  When n is itself one of the truncated roots
/// the right side uses roots lifted past P(n) instead.
OrdpCheck ordp_identity(std::uint64_t p, std::uint64_t q, std::uint64_t n);
bool ordp_identity_check(std::uint64_t p, std::uint64_t q, std::uint64_t n);

struct StirlingCheck {
  long double log_factorial = 0;  // log (t-1)!
  long double middle = 0;         // (t - 1/2) log(t-1) - t + 2
  long double right = 0;          // t (log t - 1)
  bool holds = false;
};

/// (t-1)! <= (t-1)^{t-1/2} e^{-t+2} <= (t/e)^t in logarithms.
StirlingCheck stirling_check(std::uint64_t t);

struct Theorem11Probe {
  std::uint64_t q = 0;
  double P = 0.0;
  std::int64_t count = 0;
  double envelope = 0.0;  // min(P^{1/2} q^{-eps/2}, P q^{-1/4 - 2 eps/3})
  double ratio = 0.0;
};

Theorem11Probe theorem11_probe(std::uint64_t q, double eps = 0.25);

}  // namespace sqrtlab
