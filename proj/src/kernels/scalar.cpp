#include <algorithm>

#include "pairwise.hpp"
#include "sqrtlab/kernels.hpp"

// Scalar reference kernels.  Four interleaved accumulators per block mirror
// the lane layout of the AVX2 variants.

namespace sqrtlab::kernels::scalar {

using detail::pairwise_blocks;

Complex gather_sum(std::span<const std::uint32_t> idx, const double* re, const double* im) {
  return pairwise_blocks<Complex>(0, idx.size(), [&](std::size_t b, std::size_t e) {
    double sr[4] = {0, 0, 0, 0}, si[4] = {0, 0, 0, 0};
    for (std::size_t i = b; i < e; ++i) {
      sr[(i - b) & 3] += re[idx[i]];
      si[(i - b) & 3] += im[idx[i]];
    }
    return Complex((sr[0] + sr[2]) + (sr[1] + sr[3]), (si[0] + si[2]) + (si[1] + si[3]));
  });
}

Complex gather_sum_weighted(std::span<const std::uint32_t> idx, std::span<const double> w,
                            const double* re, const double* im) {
  return pairwise_blocks<Complex>(0, idx.size(), [&](std::size_t b, std::size_t e) {
    double sr[4] = {0, 0, 0, 0}, si[4] = {0, 0, 0, 0};
    for (std::size_t i = b; i < e; ++i) {
      sr[(i - b) & 3] += w[i] * re[idx[i]];
      si[(i - b) & 3] += w[i] * im[idx[i]];
    }
    return Complex((sr[0] + sr[2]) + (sr[1] + sr[3]), (si[0] + si[2]) + (si[1] + si[3]));
  });
}

Complex gather_sum_cweighted(std::span<const std::uint32_t> idx, std::span<const double> w_re,
                             std::span<const double> w_im, const double* re, const double* im) {
  return pairwise_blocks<Complex>(0, idx.size(), [&](std::size_t b, std::size_t e) {
    double sr[4] = {0, 0, 0, 0}, si[4] = {0, 0, 0, 0};
    for (std::size_t i = b; i < e; ++i) {
      const double tr = re[idx[i]], ti = im[idx[i]];
      sr[(i - b) & 3] += w_re[i] * tr - w_im[i] * ti;
      si[(i - b) & 3] += w_re[i] * ti + w_im[i] * tr;
    }
    return Complex((sr[0] + sr[2]) + (sr[1] + sr[3]), (si[0] + si[2]) + (si[1] + si[3]));
  });
}

Complex dot(std::span<const double> a_re, std::span<const double> a_im,
            std::span<const double> b_re, std::span<const double> b_im) {
  return pairwise_blocks<Complex>(0, a_re.size(), [&](std::size_t b, std::size_t e) {
    double sr[4] = {0, 0, 0, 0}, si[4] = {0, 0, 0, 0};
    for (std::size_t i = b; i < e; ++i) {
      sr[(i - b) & 3] += a_re[i] * b_re[i] - a_im[i] * b_im[i];
      si[(i - b) & 3] += a_re[i] * b_im[i] + a_im[i] * b_re[i];
    }
    return Complex((sr[0] + sr[2]) + (sr[1] + sr[3]), (si[0] + si[2]) + (si[1] + si[3]));
  });
}

double dot_real(std::span<const double> a, std::span<const double> b) {
  return pairwise_blocks<double>(0, a.size(), [&](std::size_t lo, std::size_t hi) {
    double s[4] = {0, 0, 0, 0};
    for (std::size_t i = lo; i < hi; ++i) s[(i - lo) & 3] += a[i] * b[i];
    return (s[0] + s[2]) + (s[1] + s[3]);
  });
}

std::pair<double, double> discrepancy_extremes(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double plus = 0.0, minus = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    plus = std::max(plus, static_cast<double>(i + 1) / n - x[i]);
    minus = std::max(minus, x[i] - static_cast<double>(i) / n);
  }
  return {plus, minus};
}

}  // namespace sqrtlab::kernels::scalar
