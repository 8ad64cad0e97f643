#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "sqrtlab/kernels.hpp"

using namespace sqrtlab;
namespace k = sqrtlab::kernels;

namespace {

struct Data {
  std::vector<double> re, im, w, w_im, a, b;
  std::vector<std::uint32_t> idx;
  std::vector<double> sorted;
};

Data make(std::size_t n, std::size_t table, std::uint64_t seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Data d;
  d.re.resize(table);
  d.im.resize(table);
  for (std::size_t i = 0; i < table; ++i) d.re[i] = u(g), d.im[i] = u(g);
  for (std::size_t i = 0; i < n; ++i) {
    d.idx.push_back(static_cast<std::uint32_t>(g() % table));
    d.w.push_back(u(g));
    d.w_im.push_back(u(g));
    d.a.push_back(u(g));
    d.b.push_back(u(g));
    d.sorted.push_back((u(g) + 1.0) / 2.0 * 0.999);
  }
  std::sort(d.sorted.begin(), d.sorted.end());
  return d;
}

void expect_close(Complex x, Complex y, double tol) { EXPECT_LE(std::abs(x - y), tol) << x << " vs " << y; }

}  // namespace

class KernelEquivalence : public ::testing::TestWithParam<std::size_t> {};

TEST_P(KernelEquivalence, Avx2MatchesScalar) {
  if (!k::isa_available(k::Isa::avx2)) GTEST_SKIP() << "no AVX2 on this machine";
  const std::size_t n = GetParam();
  const Data d = make(n, 997, 7 + n);
  const double tol = 1e-13 * (1.0 + static_cast<double>(n));
  expect_close(k::scalar::gather_sum(d.idx, d.re.data(), d.im.data()),
               k::avx2::gather_sum(d.idx, d.re.data(), d.im.data()), tol);
  expect_close(k::scalar::gather_sum_weighted(d.idx, d.w, d.re.data(), d.im.data()),
               k::avx2::gather_sum_weighted(d.idx, d.w, d.re.data(), d.im.data()), tol);
  expect_close(k::scalar::gather_sum_cweighted(d.idx, d.w, d.w_im, d.re.data(), d.im.data()),
               k::avx2::gather_sum_cweighted(d.idx, d.w, d.w_im, d.re.data(), d.im.data()), tol);
  expect_close(k::scalar::dot(d.a, d.b, d.w, d.w_im), k::avx2::dot(d.a, d.b, d.w, d.w_im), tol);
  EXPECT_NEAR(k::scalar::dot_real(d.a, d.b), k::avx2::dot_real(d.a, d.b), tol);
  const auto s = k::scalar::discrepancy_extremes(d.sorted);
  const auto v = k::avx2::discrepancy_extremes(d.sorted);
  EXPECT_EQ(s.first, v.first);  // max of identical per-element terms is exact
  EXPECT_EQ(s.second, v.second);
}

INSTANTIATE_TEST_SUITE_P(Lengths, KernelEquivalence,
                         ::testing::Values(0, 1, 3, 4, 5, 7, 8, 255, 256, 257, 1000, 4099, 100000));

TEST(Kernels, ScalarAgainstNaiveLoops) {
  const Data d = make(1234, 101, 3);
  Complex g = 0.0, gw = 0.0, gc = 0.0, dt = 0.0;
  double dr = 0.0;
  for (std::size_t i = 0; i < d.idx.size(); ++i) {
    const Complex t(d.re[d.idx[i]], d.im[d.idx[i]]);
    g += t;
    gw += d.w[i] * t;
    gc += Complex(d.w[i], d.w_im[i]) * t;
    dt += Complex(d.a[i], d.b[i]) * Complex(d.w[i], d.w_im[i]);
    dr += d.a[i] * d.b[i];
  }
  expect_close(k::gather_sum(d.idx, d.re.data(), d.im.data()), g, 1e-10);
  expect_close(k::gather_sum_weighted(d.idx, d.w, d.re.data(), d.im.data()), gw, 1e-10);
  expect_close(k::gather_sum_cweighted(d.idx, d.w, d.w_im, d.re.data(), d.im.data()), gc, 1e-10);
  expect_close(k::dot(d.a, d.b, d.w, d.w_im), dt, 1e-10);
  EXPECT_NEAR(k::dot_real(d.a, d.b), dr, 1e-10);
}

TEST(Kernels, PairwiseSummationKeepsPrecision) {
  // 10^7 copies of 0.1: naive left-to-right drifts near 1e-9 relative.
  std::vector<double> a(10'000'000, 0.1), b(10'000'000, 1.0);
  EXPECT_NEAR(k::scalar::dot_real(a, b), 1e6, 1e-6);
}

TEST(Kernels, DispatchOverride) {
  const k::Isa before = k::active_isa();
  k::set_isa(k::Isa::scalar);
  EXPECT_EQ(k::active_isa(), k::Isa::scalar);
  EXPECT_STREQ(k::isa_name(k::Isa::scalar), "scalar");
  if (k::isa_available(k::Isa::avx2)) {
    k::set_isa(k::Isa::avx2);
    EXPECT_EQ(k::active_isa(), k::Isa::avx2);
  } else {
    EXPECT_THROW(k::set_isa(k::Isa::avx2), DomainError);
  }
  k::set_isa(before);
}
