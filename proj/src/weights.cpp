#include "sqrtlab/weights.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sqrtlab {

std::uint64_t Rng::range(std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo) throw DomainError("Rng::range: empty range");
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return engine_();
  // Rejection keeps the draw unbiased and platform independent.
  const std::uint64_t limit = (~std::uint64_t{0} / span) * span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % span;
}

std::string_view to_string(WeightClass c) {
  switch (c) {
    case WeightClass::indicator: return "indicator";
    case WeightClass::pm1: return "pm1";
    case WeightClass::phase: return "phase";
  }
  return "?";
}

WeightClass parse_weight_class(std::string_view name) {
  if (name == "indicator") return WeightClass::indicator;
  if (name == "pm1") return WeightClass::pm1;
  if (name == "phase") return WeightClass::phase;
  throw DomainError("unknown weight class: " + std::string(name));
}

namespace {

std::size_t support_length(std::uint64_t q, std::uint64_t N) {
  if (N < 1 || N > q) throw DomainError("WeightVector: need 1 <= N <= q");
  return static_cast<std::size_t>(std::min(N, q + 1 - N));
}

}  // namespace

WeightVector::WeightVector(std::uint64_t q, std::uint64_t N, std::vector<Complex> values)
    : q_(q), N_(N), values_(std::move(values)) {
  if (values_.size() > support_length(q, N)) {
    throw DomainError("WeightVector: support leaves [N, 2N) or [1, q]");
  }
  double sq = 0.0;
  for (const Complex& v : values_) {
    const double a = std::abs(v);
    norm_inf_ = std::max(norm_inf_, a);
    norm1_ += a;
    sq += std::norm(v);
    if (v.imag() != 0.0) real_ = false;
  }
  norm2_ = std::sqrt(sq);
  if (sq > norm_inf_ * norm1_ * (1.0 + 1e-12) + 1e-300) {
    throw DomainError("WeightVector: norm inequality |b|_2^2 <= |b|_inf |b|_1 violated");
  }
}

WeightVector WeightVector::indicator(std::uint64_t q, std::uint64_t N) {
  return {q, N, std::vector<Complex>(support_length(q, N), Complex{1.0, 0.0})};
}

WeightVector WeightVector::zero(std::uint64_t q, std::uint64_t N) {
  return {q, N, std::vector<Complex>(support_length(q, N), Complex{0.0, 0.0})};
}

WeightVector WeightVector::random_pm1(std::uint64_t q, std::uint64_t N, Rng& rng) {
  std::vector<Complex> v(support_length(q, N));
  for (auto& x : v) x = (rng.next() >> 63) ? Complex{1.0, 0.0} : Complex{-1.0, 0.0};
  return {q, N, std::move(v)};
}

WeightVector WeightVector::random_phase(std::uint64_t q, std::uint64_t N, Rng& rng) {
  std::vector<Complex> v(support_length(q, N));
  for (auto& x : v) x = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
  return {q, N, std::move(v)};
}

WeightVector WeightVector::make(WeightClass c, std::uint64_t q, std::uint64_t N, Rng& rng) {
  switch (c) {
    case WeightClass::indicator: return indicator(q, N);
    case WeightClass::pm1: return random_pm1(q, N, rng);
    case WeightClass::phase: return random_phase(q, N, rng);
  }
  throw DomainError("WeightVector::make: bad class");
}

}  // namespace sqrtlab
