#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "sqrtlab/equidist.hpp"
#include "sqrtlab/errors.hpp"
#include "sqrtlab/modular.hpp"
#include "sqrtlab/weights.hpp"

using namespace sqrtlab;

namespace {

// An end is a value with a flag: open means the right limit value+0.
struct End {
  double v;
  bool open;
};

bool below_end(double x, End e) { return e.open ? x <= e.v : x < e.v; }

std::size_t count_in(const std::vector<double>& xs, End a, End b) {
  std::size_t n = 0;
  for (double x : xs) n += !below_end(x, a) && below_end(x, b);
  return n;
}

// Independent supremum: every end pair drawn from {0, 1, x, x+0}.
double brute_discrepancy(const std::vector<double>& xs) {
  std::vector<End> ends{{0.0, false}, {1.0, false}};
  for (double x : xs) {
    ends.push_back({x, false});
    ends.push_back({x, true});
  }
  const double N = static_cast<double>(xs.size());
  double best = 0.0;
  for (End a : ends)
    for (End b : ends) {
      if (b.v < a.v || (b.v == a.v && a.open && !b.open)) continue;
      best = std::max(best, std::abs(static_cast<double>(count_in(xs, a, b)) - (b.v - a.v) * N));
    }
  return best;
}

std::vector<double> random_points(Rng& rng, std::size_t n, std::uint64_t grid) {
  std::vector<double> xs(n);
  for (double& x : xs) x = static_cast<double>(rng.range(0, grid - 1)) / static_cast<double>(grid);
  return xs;
}

std::vector<std::uint32_t> primes_upto(std::uint64_t P) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p = 2; p <= P; ++p)
    if (oracle::is_prime(p)) out.push_back(static_cast<std::uint32_t>(p));
  return out;
}

}  // namespace

TEST(PointMultiset, SortsAndValidates) {
  const PointMultiset m({0.5, 0.25, 0.5});
  EXPECT_EQ(std::vector<double>(m.values().begin(), m.values().end()), (std::vector<double>{0.25, 0.5, 0.5}));
  EXPECT_THROW(PointMultiset({1.0}), DomainError);
  EXPECT_THROW(PointMultiset({-0.1}), DomainError);
  const std::vector<std::uint32_t> r{3, 0, 1};
  const PointMultiset f = PointMultiset::from_residues(r, 4);
  EXPECT_EQ(f.values()[0], 0.0);
  EXPECT_EQ(f.values()[2], 0.75);
}

TEST(Discrepancy, SmallExamples) {
  EXPECT_EQ(discrepancy(PointMultiset{}).D, 0.0);
  EXPECT_EQ(discrepancy_oracle(PointMultiset{}), 0.0);
  EXPECT_DOUBLE_EQ(discrepancy(PointMultiset({0.5})).D, 1.0);
  EXPECT_DOUBLE_EQ(discrepancy_oracle(PointMultiset({0.5})), 1.0);
  std::vector<double> mid;
  for (int i = 1; i <= 10; ++i) mid.push_back((2.0 * i - 1.0) / 20.0);
  EXPECT_NEAR(discrepancy(PointMultiset(mid)).D, 1.0, 1e-12);
  EXPECT_NEAR(discrepancy_oracle(PointMultiset(mid)), 1.0, 1e-12);
  EXPECT_NEAR(brute_discrepancy(mid), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(discrepancy(PointMultiset({0.0, 0.0, 0.0})).D, 3.0);
}

TEST(Discrepancy, SweepMatchesOraclesWithDuplicates) {
  Rng rng(2024);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = rng.range(1, 200);
    const std::uint64_t grid = t % 3 == 0 ? 7 : (t % 3 == 1 ? 64 : 1 << 20);
    const std::vector<double> xs = random_points(rng, n, grid);
    const PointMultiset m(xs);
    const DiscrepancyReport r = discrepancy(m);
    const double oracle = discrepancy_oracle(m);
    EXPECT_NEAR(r.D, oracle, 1e-12) << t;
    if (n <= 60) EXPECT_NEAR(r.D, brute_discrepancy(xs), 1e-12) << t;
    // The witness interval realises the value.
    const double c = static_cast<double>(count_in(xs, {r.alpha, r.alpha_open}, {r.beta, r.beta_open}));
    EXPECT_NEAR(std::abs(c - (r.beta - r.alpha) * static_cast<double>(n)), r.D, 1e-9) << t;
  }
}

TEST(ErdosTuran, Arithmetic) {
  const std::vector<double> zero{0.0};
  EXPECT_DOUBLE_EQ(erdos_turan_bound(zero, 10, 1), 15.0);
  const std::vector<double> s{2.0, 4.0};
  EXPECT_DOUBLE_EQ(erdos_turan_bound(s, 9, 2), 3.0 * (3.0 + 2.0 + 2.0));
}

TEST(ErdosTuran, HoldsOnRandomAndRootSequences) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const PointMultiset m(random_points(rng, rng.range(1, 150), 1 << 16));
    const double D = discrepancy(m).D;
    const std::vector<double> S = exp_sum_moduli(m, 200);
    for (std::size_t H = 1; H <= 200; H += 13) EXPECT_LE(D, erdos_turan_bound(S, m.size(), H) + 1e-9);
  }
  for (std::uint64_t q : {101ull, 211ull}) {
    const PrimeField f(q);
    const auto res = prime_root_residues(static_cast<double>(q), f);
    const PointMultiset m = PointMultiset::from_residues(res, q);
    const std::vector<double> exact = residue_exp_sums(f, res, 200);
    const std::vector<double> fl = exp_sum_moduli(m, 200);
    for (std::size_t h = 0; h < 200; ++h) EXPECT_NEAR(exact[h], fl[h], 1e-9);
    const double D = discrepancy(m).D;
    for (std::size_t H = 1; H <= 200; ++H) EXPECT_LE(D, erdos_turan_bound(exact, m.size(), H) + 1e-9);
  }
}

TEST(RootPoints, SmallExample) {
  const PrimeField f(23);
  auto r = prime_root_residues(5, f);
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, (std::vector<std::uint32_t>{5, 7, 16, 18}));
  EXPECT_EQ(prime_root_points(5, f).size(), 4u);
  EXPECT_TRUE(prime_root_points(1.9, f).empty());
  EXPECT_TRUE(product_root_points(1.9, 5, f).empty());
}

TEST(RootPoints, MatchOracleRoots) {
  for (std::uint64_t q : {23ull, 101ull}) {
    const PrimeField f(q);
    const auto iq = static_cast<std::int64_t>(q);
    std::vector<std::uint32_t> want;
    for (std::uint32_t p : primes_upto(q))
      if (p != q)
        for (std::int64_t x : oracle::roots(p, iq)) want.push_back(static_cast<std::uint32_t>(x));
    auto got = prime_root_residues(static_cast<double>(q), f);
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want);

    std::int64_t pairs = 0;
    std::vector<std::uint32_t> wantp;
    for (std::uint32_t p : primes_upto(20))
      for (std::uint32_t r : primes_upto(30)) {
        if (p == q || r == q) continue;
        const auto rs = oracle::roots(static_cast<std::int64_t>(p) * r, iq);
        pairs += oracle::legendre(static_cast<std::int64_t>(p) * r, iq) == 1;
        for (std::int64_t x : rs) wantp.push_back(static_cast<std::uint32_t>(x));
      }
    auto gotp = product_root_residues(20, 30, f);
    EXPECT_EQ(gotp.size(), static_cast<std::size_t>(2 * pairs));
    std::sort(wantp.begin(), wantp.end());
    std::sort(gotp.begin(), gotp.end());
    EXPECT_EQ(gotp, wantp);
  }
}

TEST(Envelopes, Structure) {
  const double q = 1009;
  EXPECT_NEAR(theorem17_envelope(q, q),
              std::pow(q, 61.0 / 1760 + 61.0 / 66) + std::pow(q, 13.0 / 110 + 9.0 / 11), 1e-9 * q);
  const double P = 50, R = 70;
  const double want = std::pow(q, 0.125) * std::pow(P * R, 19.0 / 24) *
                      (std::pow(P, 7.0 / 48) / std::pow(q, 1.0 / 16) + 1) *
                      (std::pow(R, 7.0 / 48) / std::pow(q, 1.0 / 16) + 1);
  EXPECT_NEAR(corollary15_envelope(P, R, q) / want, 1.0, 1e-12);
}

TEST(GammaDelta, TrivialCeilingsAndRatios) {
  for (std::uint64_t q : {503ull, 1009ull}) {
    const PrimeField f(q);
    const double dq = static_cast<double>(q);
    for (double P : {std::pow(dq, 0.7), dq}) {
      const DiscrepancyReport g = gamma_q(P, f);
      EXPECT_LE(g.D, 2.0 * static_cast<double>(primes_upto(static_cast<std::uint64_t>(P)).size()));
      EXPECT_NEAR(g.D, discrepancy_oracle(prime_root_points(P, f)), 1e-9);
      EXPECT_NEAR(g.envelope, theorem17_envelope(P, dq) * std::pow(std::log(dq), 2.0), 1e-9 * g.envelope);
      EXPECT_NEAR(g.ratio, g.D / g.envelope, 1e-12);
    }
    const DiscrepancyReport d = delta_q(40, 40, f);
    EXPECT_LE(d.D, static_cast<double>(d.N));
    EXPECT_EQ(d.N, product_root_points(40, 40, f).size());
  }
  const PrimeField f(101);
  EXPECT_THROW(gamma_q(102, f), DomainError);
  EXPECT_THROW(delta_q(10, 102, f), DomainError);
}

TEST(ExpSums, SmallExampleAndLambdaRoute) {
  const PrimeField f23(23);
  const Complex s = s_q_sum(1, 5, f23);
  const double want = 2.0 * std::cos(10.0 * std::numbers::pi / 23.0) + 2.0 * std::cos(14.0 * std::numbers::pi / 23.0);
  EXPECT_NEAR(s.real(), want, 1e-12);
  EXPECT_NEAR(s.imag(), 0.0, 1e-12);
  EXPECT_EQ(s_q_sum(1, 1.5, f23), Complex{});
  for (std::uint64_t q : {101ull, 1009ull}) {
    const PrimeField f(q);
    for (std::uint64_t h : {1ull, 7ull}) {
      for (double P : {10.0, 97.5, static_cast<double>(q)}) {
        const Complex direct = s_q_sum(h, P, f);
        const Complex rebuilt = s_q_from_lambda(h, P, f);
        EXPECT_LE(std::abs(direct - rebuilt), 1e-6 * std::max(1.0, std::abs(direct))) << q << " " << h << " " << P;
      }
    }
  }
}

TEST(ExpSums, LambdaWeightedMatchesLoop) {
  const std::int64_t q = 61;
  const PrimeField f(61);
  Complex want{0.0, 0.0};
  for (std::int64_t k = 2; k <= 200; ++k) {
    double lam = 0.0;
    for (std::int64_t p = 2; p <= k; ++p) {
      if (k % p != 0 || !oracle::is_prime(static_cast<std::uint64_t>(p))) continue;
      std::int64_t v = k;
      while (v % p == 0) v /= p;
      if (v == 1) lam = std::log(static_cast<double>(p));
      break;
    }
    if (lam == 0.0) continue;
    for (std::int64_t x : oracle::roots(k, q)) want += lam * oracle::e(3 * x, q);
  }
  EXPECT_LE(std::abs(lambda_weighted_sum(3, 200, f) - want), 1e-9);
}

TEST(Coverage, FullForModerateModuli) {
  for (std::uint64_t q = 7; q <= 499; ++q) {
    if (!oracle::is_prime(q)) continue;
    const double dq = static_cast<double>(q);
    const CoverageReport c = eos_coverage(PrimeField(q), dq, dq, dq);
    EXPECT_EQ(c.covered, q - 1) << q;
    EXPECT_TRUE(c.missing.empty()) << q;
    EXPECT_DOUBLE_EQ(c.fraction, 1.0);
  }
}

TEST(Coverage, TinyParametersAndOracle) {
  const PrimeField f(101);
  const CoverageReport c = eos_coverage(f, 2, 2, 1);
  EXPECT_EQ(c.covered, 1u);  // only 2 * 2
  const CoverageReport d = eos_coverage(f, 5, 3, 4);
  std::vector<bool> hit(101, false);
  for (std::uint64_t p : {2, 3, 5})
    for (std::uint64_t r : {2, 3})
      for (std::uint64_t s = 1; s <= 4; ++s) hit[p * r * s * s % 101] = true;
  std::uint64_t n = 0;
  for (std::size_t k = 1; k < 101; ++k) n += hit[k];
  EXPECT_EQ(d.covered, n);
  EXPECT_EQ(d.covered + d.missing.size(), 100u);
  EXPECT_NEAR(d.threshold, std::pow(15.0, 3.0 / 16) * 4.0 / std::pow(101.0, 9.0 / 8), 1e-12);
}
