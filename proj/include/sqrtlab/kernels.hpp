#pragma once

// Data-parallel inner loops shared by the sums modules.
//
// Every kernel has a scalar reference variant and, on x86-64, an AVX2 variant
// compiled in its own translation unit.  The variant is chosen at runtime
// (CPU feature probe, overridable with SQRTLAB_ISA=scalar|avx2 or set_isa()).
// Both variants use the same blocked pairwise summation order, so results
// agree to a few ulps of the absolute term sum; tests/test_kernels.cpp pins
// the equivalence.

#include <cstdint>
#include <span>
#include <utility>

#include "sqrtlab/modular.hpp"

namespace sqrtlab::kernels {

enum class Isa { scalar, avx2 };

bool isa_available(Isa isa);
Isa active_isa();
void set_isa(Isa isa);  // throws DomainError if unavailable
const char* isa_name(Isa isa);

/// Elements per leaf block of the pairwise reduction tree.
inline constexpr std::size_t kBlock = 256;

/// sum_i T[idx[i]] for a complex table stored as (re, im) arrays.
Complex gather_sum(std::span<const std::uint32_t> idx, const double* re, const double* im);

/// sum_i w[i] * T[idx[i]] with real weights.
Complex gather_sum_weighted(std::span<const std::uint32_t> idx, std::span<const double> w,
                            const double* re, const double* im);

/// sum_i w[i] * T[idx[i]] with complex weights (w_re[i] + i w_im[i]).
Complex gather_sum_cweighted(std::span<const std::uint32_t> idx, std::span<const double> w_re,
                             std::span<const double> w_im, const double* re, const double* im);

/// Unconjugated complex dot product sum_i a[i] * b[i].
Complex dot(std::span<const double> a_re, std::span<const double> a_im,
            std::span<const double> b_re, std::span<const double> b_im);

/// Real dot product sum_i a[i] * b[i].
double dot_real(std::span<const double> a, std::span<const double> b);

/// For sorted x_1 <= ... <= x_N returns
/// (max_i (i/N - x_i), max_i (x_i - (i-1)/N)).  Both are exact in either variant.
std::pair<double, double> discrepancy_extremes(std::span<const double> sorted);

// Explicit-variant entry points used by the equivalence tests.
namespace scalar {
Complex gather_sum(std::span<const std::uint32_t>, const double*, const double*);
Complex gather_sum_weighted(std::span<const std::uint32_t>, std::span<const double>, const double*,
                            const double*);
Complex gather_sum_cweighted(std::span<const std::uint32_t>, std::span<const double>,
                             std::span<const double>, const double*, const double*);
Complex dot(std::span<const double>, std::span<const double>, std::span<const double>,
            std::span<const double>);
double dot_real(std::span<const double>, std::span<const double>);
std::pair<double, double> discrepancy_extremes(std::span<const double>);
}  // namespace scalar

namespace avx2 {
Complex gather_sum(std::span<const std::uint32_t>, const double*, const double*);
Complex gather_sum_weighted(std::span<const std::uint32_t>, std::span<const double>, const double*,
                            const double*);
Complex gather_sum_cweighted(std::span<const std::uint32_t>, std::span<const double>,
                             std::span<const double>, const double*, const double*);
Complex dot(std::span<const double>, std::span<const double>, std::span<const double>,
            std::span<const double>);
double dot_real(std::span<const double>, std::span<const double>);
std::pair<double, double> discrepancy_extremes(std::span<const double>);
}  // namespace avx2

}  // namespace sqrtlab::kernels
