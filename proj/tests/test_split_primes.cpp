#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "sqrtlab/errors.hpp"
#include "sqrtlab/split_primes.hpp"

using namespace sqrtlab;

namespace {

bool has_root_of_neg_q(std::uint64_t p, std::uint64_t q) {
  for (std::uint64_t x = 0; x < p; ++x)
    if ((x * x + q) % p == 0) return true;
  return false;
}

int ord(std::uint64_t p, std::uint64_t n) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

std::vector<std::uint64_t> primes_3_mod_16(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (q % 16 == 3 && oracle::is_prime(q)) out.push_back(q);
  return out;
}

}  // namespace

TEST(Splitting, Examples) {
  EXPECT_EQ(is_split(7, 7), Splitting::ramified);
  EXPECT_EQ(is_split(2, 7), Splitting::split);
  EXPECT_EQ(is_split(3, 7), Splitting::inert);
  EXPECT_EQ(is_split(2, 67), Splitting::inert);
  EXPECT_EQ(is_split(2, 13), Splitting::ramified);
  EXPECT_THROW(is_split(9, 7), DomainError);
  EXPECT_STREQ(to_string(Splitting::split), "split");
}

TEST(Splitting, OddPrimesMatchRootScan) {
  for (std::uint64_t q : {7ull, 13ull, 23ull, 67ull, 101ull}) {
    for (std::uint64_t p = 3; p < 400; p += 2) {
      if (!oracle::is_prime(p) || p == q) continue;
      EXPECT_EQ(is_split(p, q) == Splitting::split, has_root_of_neg_q(p, q)) << p << " " << q;
    }
  }
}

TEST(Census, CountsAndInvariant) {
  EXPECT_EQ(count_split(5, 23), 2);
  EXPECT_EQ(count_split(1, 23), 0);
  for (std::uint64_t q : {7ull, 13ull, 67ull, 499ull}) {
    std::int64_t prev = 0;
    for (double P = 2; P <= 3000; P += 37) {
      const SplitCensus c = split_census(P, q);
      EXPECT_EQ(c.split + c.inert + c.ramified, c.primes);
      std::int64_t pi = 0;
      for (std::uint64_t n = 2; n <= static_cast<std::uint64_t>(P); ++n) pi += oracle::is_prime(n);
      EXPECT_EQ(c.primes, pi);
      EXPECT_EQ(c.split, count_split(P, q));
      EXPECT_GE(c.split, prev);
      prev = c.split;
    }
    const SplitCensus at_q = split_census(static_cast<double>(q), q);
    EXPECT_EQ(at_q.ramified, q % 4 == 1 ? 2 : 1);
  }
}

TEST(LeastPrimes, SmallExamplesAndPrimality) {
  EXPECT_EQ(least_nonresidue(7), 3u);
  EXPECT_EQ(least_split_prime(7), 2u);
  for (std::uint64_t q = 5; q < 5000; ++q) {
    if (!oracle::is_prime(q)) continue;
    const std::uint64_t n = least_nonresidue(q);
    EXPECT_TRUE(oracle::is_prime(n)) << q;
    EXPECT_EQ(oracle::legendre(static_cast<std::int64_t>(n), static_cast<std::int64_t>(q)), -1);
    for (std::uint64_t m = 2; m < n; ++m) EXPECT_EQ(oracle::legendre(static_cast<std::int64_t>(m), static_cast<std::int64_t>(q)), 1);
    const std::uint64_t p = least_split_prime(q);
    EXPECT_TRUE(oracle::is_prime(p));
    EXPECT_EQ(oracle::legendre(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)), 1);
  }
  EXPECT_THROW(least_nonresidue(3), DomainError);
}

TEST(PrincipalForm, Values) {
  EXPECT_EQ(principal_form_value(1, 67), 19u);
  EXPECT_EQ(principal_form_value(7, 67), 73u);
  for (std::uint64_t q : primes_3_mod_16(19, 2000)) {
    for (std::uint64_t n = 1; n <= 50; ++n) {
      const std::uint64_t P = principal_form_value(n, q);
      EXPECT_EQ(4 * P - (2 * n + 1) * (2 * n + 1), q);
      EXPECT_EQ(P % 2, 1u);
    }
  }
  EXPECT_THROW(principal_form_value(1, 7), DomainError);
  EXPECT_THROW(principal_form_value(0, 67), DomainError);
}

TEST(SplitFactors, SmallestModulus) {
  EXPECT_NEAR((2.0 - std::log(3.0 * std::sqrt(2.0))) * std::sqrt(3.0) / 4.0, 0.2402, 1e-4);
  const Theorem12Report r = theorem12_verify(67);
  EXPECT_EQ(r.t, 7u);
  EXPECT_EQ(r.primes, (std::vector<std::uint64_t>{19, 23, 29, 37, 47, 59}));
  EXPECT_EQ(r.excluded, (std::vector<std::uint64_t>{73}));
  EXPECT_TRUE(r.not_split.empty());
  EXPECT_EQ(r.omega, 6);
  EXPECT_NEAR(r.bound, 0.4618, 1e-4);
  EXPECT_TRUE(r.all_odd);
  EXPECT_TRUE(r.pass);
  EXPECT_THROW(theorem12_verify(19), DomainError);
  EXPECT_THROW(theorem12_verify(71), DomainError);
}

TEST(SplitFactors, SweepAndFactorsAgreeWithTrialDivision) {
  for (std::uint64_t q : primes_3_mod_16(67, 10000)) {
    const Theorem12Report r = theorem12_verify(q);
    EXPECT_TRUE(r.pass) << q;
    EXPECT_TRUE(r.not_split.empty()) << q;
    EXPECT_TRUE(r.all_odd) << q;
    EXPECT_EQ(r.t, static_cast<std::uint64_t>(std::floor(std::sqrt(3.0 * static_cast<double>(q) / 4.0))));
    if (q > 2000) continue;
    std::vector<std::uint64_t> want;
    for (std::uint64_t n = 1; n <= r.t; ++n) {
      std::uint64_t v = principal_form_value(n, q);
      for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d) continue;
        if (d <= q) want.push_back(d);
        while (v % d == 0) v /= d;
      }
      if (v > 1 && v <= q) want.push_back(v);
    }
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    EXPECT_EQ(r.primes, want) << q;
    for (std::uint64_t p : want) EXPECT_EQ(is_split(p, q), Splitting::split);
  }
}

TEST(Hensel, Examples) {
  EXPECT_EQ(hensel_sqrt(2, 7, 2), (std::array<std::uint64_t, 2>{10, 39}));
  EXPECT_EQ(hensel_sqrt(2, 7, 1), (std::array<std::uint64_t, 2>{3, 4}));
  EXPECT_EQ(hensel_sqrt(1, 11, 3), (std::array<std::uint64_t, 2>{1, 1330}));
  EXPECT_THROW(hensel_sqrt(3, 7, 2), DomainError);
  for (std::uint64_t p : {3ull, 5ull, 13ull, 97ull}) {
    std::uint64_t pk = 1;
    for (int k = 1; k <= 4; ++k) {
      pk *= p;
      for (std::uint64_t a = 1; a < p; ++a) {
        if (oracle::legendre(static_cast<std::int64_t>(a), static_cast<std::int64_t>(p)) != 1) continue;
        for (std::uint64_t x : hensel_sqrt(a, p, k)) EXPECT_EQ(x * x % pk, a % pk);
      }
    }
  }
}

TEST(Ordp, KappaDefinition) {
  EXPECT_EQ(kappa(19, 7), 1);
  EXPECT_EQ(kappa(3, 9), 3);
  EXPECT_EQ(kappa(3, 8), 2);
  EXPECT_EQ(kappa(3, 26), 3);
  EXPECT_EQ(kappa(3, 2), 1);
}

TEST(Ordp, SmallExample) {
  const OrdpCheck c = ordp_identity(19, 67, 1);
  EXPECT_EQ(c.lhs, 1);
  EXPECT_EQ(c.rhs, 1);
  EXPECT_TRUE(c.holds);
  EXPECT_TRUE(ordp_identity_check(19, 67, 2));
  EXPECT_EQ(ordp_identity(19, 67, 2).lhs, 0);
  EXPECT_THROW(ordp_identity(2, 67, 1), DomainError);
  EXPECT_THROW(ordp_identity(3, 67, 1), DomainError);  // 3 is inert for 67
}

TEST(Ordp, ExhaustiveSweep) {
  for (std::uint64_t q : primes_3_mod_16(19, 1000)) {
    const std::uint64_t t = theorem12_t(q);
    std::vector<std::uint64_t> ps;
    for (std::uint64_t n = 1; n <= t; ++n) {
      const std::uint64_t v = principal_form_value(n, q);
      for (std::uint64_t p = 3; p <= q && p <= v; p += 2)
        if (v % p == 0 && oracle::is_prime(p)) ps.push_back(p);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    for (std::uint64_t p : ps) {
      for (std::uint64_t n = 1; n <= t; ++n) {
        const OrdpCheck c = ordp_identity(p, q, n);
        EXPECT_TRUE(c.holds) << q << " " << p << " " << n;
        EXPECT_EQ(c.lhs, ord(p, principal_form_value(n, q)));
      }
    }
  }
}

TEST(Stirling, HoldsBeyondSeven) {
  for (std::uint64_t t = 8; t <= 1000; ++t) {
    const StirlingCheck s = stirling_check(t);
    EXPECT_TRUE(s.holds) << t;
    long double lf = 0;
    for (std::uint64_t k = 2; k < t; ++k) lf += std::log(static_cast<long double>(k));
    EXPECT_NEAR(static_cast<double>(s.log_factorial), static_cast<double>(lf), 1e-9);
    EXPECT_LE(s.log_factorial, s.right);
  }
}

TEST(SplitCount, ProbeReportsRatio) {
  const Theorem11Probe p = theorem11_probe(1009);
  EXPECT_NEAR(p.P, std::pow(1009.0, 0.75), 1e-9);
  EXPECT_EQ(p.count, count_split(p.P, 1009));
  EXPECT_GT(p.envelope, 0.0);
  EXPECT_NEAR(p.ratio, static_cast<double>(p.count) / p.envelope, 1e-12);
}
