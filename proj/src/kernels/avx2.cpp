#include <immintrin.h>

#include <algorithm>

#include "pairwise.hpp"
#include "sqrtlab/kernels.hpp"

// AVX2 variants.  Compiled with -mavx2 -mfma; only called after the runtime
// CPU probe in dispatch.cpp succeeds.  Lane k of each accumulator holds the
// elements at block offsets = k (mod 4), matching the scalar reference.

namespace sqrtlab::kernels::avx2 {

using detail::pairwise_blocks;

namespace {

inline double hsum(__m256d v) {
  alignas(32) double l[4];
  _mm256_store_pd(l, v);
  return (l[0] + l[2]) + (l[1] + l[3]);
}

inline __m128i load_idx(const std::uint32_t* p) {
  return _mm_loadu_si128(reinterpret_cast<const __m128i*>(p));
}

}  // namespace

Complex gather_sum(std::span<const std::uint32_t> idx, const double* re, const double* im) {
  return pairwise_blocks<Complex>(0, idx.size(), [&](std::size_t b, std::size_t e) {
    __m256d ar = _mm256_setzero_pd(), ai = _mm256_setzero_pd();
    std::size_t i = b;
    for (; i + 4 <= e; i += 4) {
      const __m128i vi = load_idx(idx.data() + i);
      ar = _mm256_add_pd(ar, _mm256_i32gather_pd(re, vi, 8));
      ai = _mm256_add_pd(ai, _mm256_i32gather_pd(im, vi, 8));
    }
    alignas(32) double lr[4], li[4];
    _mm256_store_pd(lr, ar);
    _mm256_store_pd(li, ai);
    for (std::size_t k = 0; i < e; ++i, ++k) {
      lr[k] += re[idx[i]];
      li[k] += im[idx[i]];
    }
    return Complex((lr[0] + lr[2]) + (lr[1] + lr[3]), (li[0] + li[2]) + (li[1] + li[3]));
  });
}

Complex gather_sum_weighted(std::span<const std::uint32_t> idx, std::span<const double> w,
                            const double* re, const double* im) {
  return pairwise_blocks<Complex>(0, idx.size(), [&](std::size_t b, std::size_t e) {
    __m256d ar = _mm256_setzero_pd(), ai = _mm256_setzero_pd();
    std::size_t i = b;
    for (; i + 4 <= e; i += 4) {
      const __m128i vi = load_idx(idx.data() + i);
      const __m256d vw = _mm256_loadu_pd(w.data() + i);
      ar = _mm256_add_pd(ar, _mm256_mul_pd(vw, _mm256_i32gather_pd(re, vi, 8)));
      ai = _mm256_add_pd(ai, _mm256_mul_pd(vw, _mm256_i32gather_pd(im, vi, 8)));
    }
    alignas(32) double lr[4], li[4];
    _mm256_store_pd(lr, ar);
    _mm256_store_pd(li, ai);
    for (std::size_t k = 0; i < e; ++i, ++k) {
      lr[k] += w[i] * re[idx[i]];
      li[k] += w[i] * im[idx[i]];
    }
    return Complex((lr[0] + lr[2]) + (lr[1] + lr[3]), (li[0] + li[2]) + (li[1] + li[3]));
  });
}

Complex gather_sum_cweighted(std::span<const std::uint32_t> idx, std::span<const double> w_re,
                             std::span<const double> w_im, const double* re, const double* im) {
  return pairwise_blocks<Complex>(0, idx.size(), [&](std::size_t b, std::size_t e) {
    __m256d ar = _mm256_setzero_pd(), ai = _mm256_setzero_pd();
    std::size_t i = b;
    for (; i + 4 <= e; i += 4) {
      const __m128i vi = load_idx(idx.data() + i);
      const __m256d tr = _mm256_i32gather_pd(re, vi, 8);
      const __m256d ti = _mm256_i32gather_pd(im, vi, 8);
      const __m256d wr = _mm256_loadu_pd(w_re.data() + i);
      const __m256d wi = _mm256_loadu_pd(w_im.data() + i);
      ar = _mm256_add_pd(ar, _mm256_sub_pd(_mm256_mul_pd(wr, tr), _mm256_mul_pd(wi, ti)));
      ai = _mm256_add_pd(ai, _mm256_add_pd(_mm256_mul_pd(wr, ti), _mm256_mul_pd(wi, tr)));
    }
    alignas(32) double lr[4], li[4];
    _mm256_store_pd(lr, ar);
    _mm256_store_pd(li, ai);
    for (std::size_t k = 0; i < e; ++i, ++k) {
      const double tr = re[idx[i]], ti = im[idx[i]];
      lr[k] += w_re[i] * tr - w_im[i] * ti;
      li[k] += w_re[i] * ti + w_im[i] * tr;
    }
    return Complex((lr[0] + lr[2]) + (lr[1] + lr[3]), (li[0] + li[2]) + (li[1] + li[3]));
  });
}

Complex dot(std::span<const double> a_re, std::span<const double> a_im,
            std::span<const double> b_re, std::span<const double> b_im) {
  return pairwise_blocks<Complex>(0, a_re.size(), [&](std::size_t b, std::size_t e) {
    __m256d ar = _mm256_setzero_pd(), ai = _mm256_setzero_pd();
    std::size_t i = b;
    for (; i + 4 <= e; i += 4) {
      const __m256d xr = _mm256_loadu_pd(a_re.data() + i), xi = _mm256_loadu_pd(a_im.data() + i);
      const __m256d yr = _mm256_loadu_pd(b_re.data() + i), yi = _mm256_loadu_pd(b_im.data() + i);
      ar = _mm256_add_pd(ar, _mm256_sub_pd(_mm256_mul_pd(xr, yr), _mm256_mul_pd(xi, yi)));
      ai = _mm256_add_pd(ai, _mm256_add_pd(_mm256_mul_pd(xr, yi), _mm256_mul_pd(xi, yr)));
    }
    alignas(32) double lr[4], li[4];
    _mm256_store_pd(lr, ar);
    _mm256_store_pd(li, ai);
    for (std::size_t k = 0; i < e; ++i, ++k) {
      lr[k] += a_re[i] * b_re[i] - a_im[i] * b_im[i];
      li[k] += a_re[i] * b_im[i] + a_im[i] * b_re[i];
    }
    return Complex((lr[0] + lr[2]) + (lr[1] + lr[3]), (li[0] + li[2]) + (li[1] + li[3]));
  });
}

double dot_real(std::span<const double> a, std::span<const double> b) {
  return pairwise_blocks<double>(0, a.size(), [&](std::size_t lo, std::size_t hi) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = lo;
    for (; i + 4 <= hi; i += 4) {
      acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i)));
    }
    alignas(32) double l[4];
    _mm256_store_pd(l, acc);
    for (std::size_t k = 0; i < hi; ++i, ++k) l[k] += a[i] * b[i];
    return (l[0] + l[2]) + (l[1] + l[3]);
  });
}

std::pair<double, double> discrepancy_extremes(std::span<const double> x) {
  const std::size_t n = x.size();
  const __m256d vn = _mm256_set1_pd(static_cast<double>(n));
  const __m256d four = _mm256_set1_pd(4.0);
  __m256d idx = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d plus = _mm256_setzero_pd(), minus = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d v = _mm256_loadu_pd(x.data() + i);
    const __m256d lo = _mm256_div_pd(idx, vn);
    const __m256d hi = _mm256_div_pd(_mm256_add_pd(idx, one), vn);
    plus = _mm256_max_pd(plus, _mm256_sub_pd(hi, v));
    minus = _mm256_max_pd(minus, _mm256_sub_pd(v, lo));
    idx = _mm256_add_pd(idx, four);
  }
  alignas(32) double p[4], m[4];
  _mm256_store_pd(p, plus);
  _mm256_store_pd(m, minus);
  double rp = std::max(std::max(p[0], p[1]), std::max(p[2], p[3]));
  double rm = std::max(std::max(m[0], m[1]), std::max(m[2], m[3]));
  const double dn = static_cast<double>(n);
  for (; i < n; ++i) {
    rp = std::max(rp, static_cast<double>(i + 1) / dn - x[i]);
    rm = std::max(rm, x[i] - static_cast<double>(i) / dn);
  }
  return {rp, rm};
}

}  // namespace sqrtlab::kernels::avx2
