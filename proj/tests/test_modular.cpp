#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sqrtlab/modular.hpp"

using namespace sqrtlab;

TEST(Kronecker, KnownValues) {
  EXPECT_EQ(kronecker(0, 7), 0);
  EXPECT_EQ(kronecker(2, 7), 1);
  EXPECT_EQ(kronecker(5, 7), -1);
  EXPECT_THROW(kronecker(3, 0), DomainError);
}

TEST(Kronecker, MatchesLegendreAndIsMultiplicative) {
  for (std::uint64_t q = 3; q <= 200; q += 2) {
    if (!oracle::is_prime(q)) continue;
    const auto qi = static_cast<std::int64_t>(q);
    for (std::int64_t a = -5; a < qi; ++a) EXPECT_EQ(kronecker(a, qi), oracle::legendre(a, qi)) << a << " " << q;
    for (std::int64_t a = 0; a < qi; ++a) {
      for (std::int64_t b = 0; b < qi; ++b) {
        ASSERT_EQ(kronecker(a * b, qi), kronecker(a, qi) * kronecker(b, qi));
      }
    }
  }
}

TEST(Kronecker, EvenArguments) {
  // (a/2) is 0 for even a, 1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
  EXPECT_EQ(kronecker(-7, 2), 1);
  EXPECT_EQ(kronecker(-3, 2), -1);
  EXPECT_EQ(kronecker(-67, 2), -1);
  EXPECT_EQ(kronecker(4, 2), 0);
  EXPECT_EQ(kronecker(-23, 4), 1);
}

TEST(Kronecker, CharacterSumVanishes) {
  for (std::uint64_t q = 3; q <= 1000; q += 2) {
    if (!oracle::is_prime(q)) continue;
    int s = 0;
    for (std::uint64_t a = 0; a < q; ++a) s += kronecker(static_cast<std::int64_t>(a), static_cast<std::int64_t>(q));
    EXPECT_EQ(s, 0) << q;
  }
}

TEST(Primality, AgreesWithTrialDivision) {
  for (std::uint64_t n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), oracle::is_prime(n)) << n;
  EXPECT_TRUE(is_prime(4611686018427387847ull));  // largest prime below 2^62
  EXPECT_FALSE(is_prime(3215031751ull));          // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(ModArith, MulPowIsqrt) {
  const std::uint64_t m = (std::uint64_t{1} << 62) - 57;
  EXPECT_EQ(mul_mod(m - 1, m - 1, m), 1u);
  EXPECT_EQ(pow_mod(2, 10, 1000), 24u);
  EXPECT_EQ(isqrt(0), 0u);
  EXPECT_EQ(isqrt(99), 9u);
  EXPECT_EQ(isqrt(100), 10u);
  EXPECT_EQ(isqrt(~std::uint64_t{0}), 4294967295u);
  EXPECT_EQ(reduce(-1, 7), 6u);
  EXPECT_EQ(reduce(INT64_MIN, 7), static_cast<std::uint64_t>(((INT64_MIN % 7) + 7) % 7));
}

TEST(InvMod, KnownValuesAndProperty) {
  EXPECT_EQ(inv_mod(1, 13), 1u);
  EXPECT_EQ(inv_mod(2, 7), 4u);
  EXPECT_EQ(inv_mod(3, 11), 4u);
  EXPECT_THROW(inv_mod(11, 11), DomainError);
  for (std::int64_t a = 1; a < 101; ++a) EXPECT_EQ(inv_mod(a, 101), static_cast<std::uint64_t>(oracle::inverse(a, 101)));
}

TEST(SqrtMod, KnownValues) {
  const RootSet r = sqrt_mod(2, 7);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0], 3u);
  EXPECT_EQ(r[1], 4u);
  EXPECT_TRUE(sqrt_mod(3, 7).empty());
  const RootSet one = sqrt_mod(1, 13);
  ASSERT_EQ(one.size(), 2u);
  EXPECT_EQ(one[0], 1u);
  EXPECT_EQ(one[1], 12u);
  const RootSet zero = sqrt_mod(0, 13);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_EQ(zero[0], 0u);
}

TEST(SqrtMod, TonelliShanksAgreesWithScanUpTo1000) {
  for (std::uint64_t q = 3; q <= 1000; q += 2) {
    if (!oracle::is_prime(q)) continue;
    for (std::uint64_t a = 0; a < q; ++a) {
      const RootSet r = sqrt_mod(a, q);
      const auto expect = oracle::roots(static_cast<std::int64_t>(a), static_cast<std::int64_t>(q));
      ASSERT_EQ(r.size(), expect.size()) << a << " mod " << q;
      for (std::size_t i = 0; i < r.size(); ++i) ASSERT_EQ(r[i], static_cast<std::uint64_t>(expect[i]));
      if (a != 0) {
        EXPECT_EQ(static_cast<int>(r.size()), 1 + kronecker(static_cast<std::int64_t>(a), static_cast<std::int64_t>(q)));
      }
    }
  }
}

TEST(SqrtMod, LargeModulus) {
  const std::uint64_t q = 4611686018427387847ull;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 123456789ull}) {
    for (std::uint64_t x : sqrt_mod(a, q)) EXPECT_EQ(mul_mod(x, x, q), a);
  }
}

TEST(EpsAndE, KnownValues) {
  EXPECT_EQ(eps_q(5), Complex(1, 0));
  EXPECT_EQ(eps_q(7), Complex(0, 1));
  EXPECT_EQ(eps_q(13), Complex(1, 0));
  EXPECT_NEAR(std::abs(e_q(0, 11) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(e_q(11, 11) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(e_q(1, 5).real(), 0.30902, 1e-5);
  EXPECT_NEAR(e_q(1, 5).imag(), 0.95106, 1e-5);
  const std::uint64_t q = 1000003;
  for (std::int64_t x : {-5, 17, 999999, 123456}) {
    for (std::int64_t y : {3, -77, 500000}) {
      EXPECT_NEAR(std::abs(e_q(x, q) * e_q(y, q) - e_q(x + y, q)), 0.0, 1e-12);
    }
  }
}

TEST(PrimeField, TablesMatchDirect) {
  for (std::uint64_t q : {3ull, 5ull, 97ull, 1009ull}) {
    const PrimeField f(q);
    const PrimeField bare(q, 0);  // no tables: Tonelli-Shanks and exponentiation
    ASSERT_TRUE(f.has_tables());
    ASSERT_FALSE(bare.has_tables());
    for (std::uint64_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.legendre(a), bare.legendre(a));
      const RootSet r1 = f.sqrt(a), r2 = bare.sqrt(a);
      ASSERT_EQ(r1.size(), r2.size());
      for (std::size_t i = 0; i < r1.size(); ++i) EXPECT_EQ(r1[i], r2[i]);
      if (a) {
        EXPECT_EQ(f.inv(a), bare.inv(a));
        EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      }
      EXPECT_NEAR(std::abs(f.unit(a) - oracle::e(static_cast<std::int64_t>(a), static_cast<std::int64_t>(q))), 0.0, 1e-13);
    }
  }
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(9), DomainError);
  EXPECT_THROW(PrimeField(2), DomainError);
  EXPECT_THROW(PrimeField(1), DomainError);
}
