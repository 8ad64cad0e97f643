#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "sqrtlab/modular.hpp"

namespace sqrtlab {

/// Seeded mt19937_64 stream.  Doubles are formed from the top 53 bits so the
/// sequence is identical on every standard library.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [lo, hi].
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

enum class WeightClass { indicator, pm1, phase };

std::string_view to_string(WeightClass c);
WeightClass parse_weight_class(std::string_view name);  // throws DomainError

/// Complex weights supported on the dyadic residue interval [N, 2N), clipped
/// to [1, q].  Norms are cached at construction.
class WeightVector {
 public:
  /// values[k] is the weight of residue N + k.
  WeightVector(std::uint64_t q, std::uint64_t N, std::vector<Complex> values);

  static WeightVector indicator(std::uint64_t q, std::uint64_t N);
  static WeightVector random_pm1(std::uint64_t q, std::uint64_t N, Rng& rng);
  static WeightVector random_phase(std::uint64_t q, std::uint64_t N, Rng& rng);
  static WeightVector make(WeightClass c, std::uint64_t q, std::uint64_t N, Rng& rng);
  static WeightVector zero(std::uint64_t q, std::uint64_t N);

  std::uint64_t q() const { return q_; }
  std::uint64_t start() const { return N_; }
  /// One past the last supported residue.
  std::uint64_t stop() const { return N_ + values_.size(); }
  std::span<const Complex> values() const { return values_; }

  /// Weight of residue r (0 outside the support).
  Complex at(std::uint64_t r) const {
    return r >= N_ && r < stop() ? values_[r - N_] : Complex{0.0, 0.0};
  }

  double norm_inf() const { return norm_inf_; }
  double norm1() const { return norm1_; }
  double norm2() const { return norm2_; }
  bool is_real() const { return real_; }

 private:
  std::uint64_t q_;
  std::uint64_t N_;
  std::vector<Complex> values_;
  double norm_inf_ = 0.0;
  double norm1_ = 0.0;
  double norm2_ = 0.0;
  bool real_ = true;
};

}  // namespace sqrtlab
