#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sqrtlab/errors.hpp"
#include "sqrtlab/primes.hpp"

using namespace sqrtlab;

TEST(Sieve, MatchesTrialDivision) {
  const auto ps = primes_up_to(30000);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t n = 0; n <= 30000; ++n) {
    if (oracle::is_prime(n)) expect.push_back(n);
  }
  EXPECT_EQ(ps, expect);
  EXPECT_TRUE(primes_up_to(1).empty());
  EXPECT_EQ(primes_up_to(2), std::vector<std::uint64_t>{2});
}

TEST(Sieve, SegmentedRange) {
  const auto seg = primes_in_range(1000000, 1001000);
  for (std::uint64_t n = 1000000; n <= 1001000; ++n) {
    const bool listed = std::binary_search(seg.begin(), seg.end(), n);
    ASSERT_EQ(listed, oracle::is_prime(n)) << n;
  }
  EXPECT_EQ(primes_in_range(24, 28).size(), 0u);
  EXPECT_EQ(primes_in_range(67, 67), std::vector<std::uint64_t>{67});
}

TEST(Factorize, RebuildsTheNumber) {
  for (std::uint64_t n = 1; n < 5000; ++n) {
    std::uint64_t prod = 1;
    std::uint64_t last = 0;
    for (const PrimePower& pp : factorize(n)) {
      EXPECT_TRUE(oracle::is_prime(pp.p));
      EXPECT_GT(pp.p, last);
      last = pp.p;
      for (int i = 0; i < pp.e; ++i) prod *= pp.p;
    }
    ASSERT_EQ(prod, n);
  }
  const std::vector<PrimePower> f18{{2, 1}, {3, 2}};
  EXPECT_EQ(factorize(18), f18);
  const auto small = primes_up_to(100);
  const std::vector<PrimePower> big{{3, 1}, {10007, 1}};  // cofactor above the sieve is prime
  EXPECT_EQ(factorize(30021, small), big);
}

TEST(PadicOrder, Values) {
  EXPECT_EQ(padic_order(72, 2), 3);
  EXPECT_EQ(padic_order(-72, 3), 2);
  EXPECT_EQ(padic_order(5, 3), 0);
  EXPECT_THROW(padic_order(0, 3), DomainError);
}

TEST(VonMangoldt, Values) {
  EXPECT_EQ(von_mangoldt(1), 0.0);
  EXPECT_DOUBLE_EQ(von_mangoldt(8), std::log(2.0));
  EXPECT_DOUBLE_EQ(von_mangoldt(49), std::log(7.0));
  EXPECT_EQ(von_mangoldt(12), 0.0);
  // sum over d | n of Lambda(d) = log n
  for (std::uint64_t n = 1; n < 300; ++n) {
    double s = 0.0;
    for (std::uint64_t d = 1; d <= n; ++d) {
      if (n % d == 0) s += von_mangoldt(d);
    }
    EXPECT_NEAR(s, std::log(static_cast<double>(n)), 1e-12);
  }
}

TEST(Factorize, ShortPrimeListIsRefused) {
  const auto small = primes_up_to(100);
  EXPECT_THROW(factorize(10007ull * 10009ull, small), DomainError);
}
