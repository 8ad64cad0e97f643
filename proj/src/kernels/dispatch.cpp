#include <atomic>
#include <cstdlib>
#include <cstring>
#include <string>

#include "sqrtlab/kernels.hpp"

namespace sqrtlab::kernels {

namespace {

Isa detect() {
  if (const char* env = std::getenv("SQRTLAB_ISA")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::scalar;
    if (std::strcmp(env, "avx2") == 0 && isa_available(Isa::avx2)) return Isa::avx2;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(SQRTLAB_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw DomainError(std::string("kernel variant unavailable: ") + isa_name(isa));
  current().store(isa, std::memory_order_relaxed);
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

#if defined(SQRTLAB_HAVE_AVX2)
#define SQRTLAB_DISPATCH(fn, ...) \
  (active_isa() == Isa::avx2 ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define SQRTLAB_DISPATCH(fn, ...) scalar::fn(__VA_ARGS__)
#endif

Complex gather_sum(std::span<const std::uint32_t> idx, const double* re, const double* im) {
  return SQRTLAB_DISPATCH(gather_sum, idx, re, im);
}

Complex gather_sum_weighted(std::span<const std::uint32_t> idx, std::span<const double> w,
                            const double* re, const double* im) {
  return SQRTLAB_DISPATCH(gather_sum_weighted, idx, w, re, im);
}

Complex gather_sum_cweighted(std::span<const std::uint32_t> idx, std::span<const double> w_re,
                             std::span<const double> w_im, const double* re, const double* im) {
  return SQRTLAB_DISPATCH(gather_sum_cweighted, idx, w_re, w_im, re, im);
}

Complex dot(std::span<const double> a_re, std::span<const double> a_im,
            std::span<const double> b_re, std::span<const double> b_im) {
  return SQRTLAB_DISPATCH(dot, a_re, a_im, b_re, b_im);
}

double dot_real(std::span<const double> a, std::span<const double> b) {
  return SQRTLAB_DISPATCH(dot_real, a, b);
}

std::pair<double, double> discrepancy_extremes(std::span<const double> sorted) {
  return SQRTLAB_DISPATCH(discrepancy_extremes, sorted);
}

#undef SQRTLAB_DISPATCH

}  // namespace sqrtlab::kernels
