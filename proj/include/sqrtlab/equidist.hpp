#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqrtlab/modular.hpp"

namespace sqrtlab {

/// Sorted points of [0,1), repeats kept.
class PointMultiset {
 public:
  PointMultiset() = default;
  explicit PointMultiset(std::vector<double> values);  // sorts; DomainError outside [0,1)

  /// Points r/q for residues r, already reduced mod q.
  static PointMultiset from_residues(std::span<const std::uint32_t> residues, std::uint64_t q);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> values_;
};

struct DiscrepancyReport {
  double D = 0.0;       // unnormalized: sup |#{xi in [alpha,beta)} - (beta-alpha) N|
  std::size_t N = 0;
  double alpha = 0.0;   // witness; the sup may only be approached at these ends
  double beta = 0.0;
  bool alpha_open = false;  // true: alpha is a right limit alpha+0
  bool beta_open = false;   // true: beta is a right limit beta+0
  double envelope = 0.0;
  double ratio = 0.0;
};

/// Sorted sweep N (D+ + D-) through the dispatched kernel, with the witness.
DiscrepancyReport discrepancy(const PointMultiset& pts);

/// O(N^2) over all endpoint pairs, taking each point value and its right
/// limit as a candidate end.  Ground truth for the sweep.
double discrepancy_oracle(const PointMultiset& pts);

/// 3 (N/(H+1) + sum_h |S_h|/h), with abs_sums[h-1] = |S_h|.
double erdos_turan_bound(std::span<const double> abs_sums, std::size_t N, std::size_t H);

/// |sum_r e(h r/q)| for h = 1..H, exact residue arithmetic.
std::vector<double> residue_exp_sums(const PrimeField& field, std::span<const std::uint32_t> residues,
                                     std::size_t H);

/// |sum_n e(h xi_n)| for h = 1..H in floating point.
std::vector<double> exp_sum_moduli(const PointMultiset& pts, std::size_t H);

/// Roots x of x^2 = p over primes p <= P, p != q.
std::vector<std::uint32_t> prime_root_residues(double P, const PrimeField& field);
PointMultiset prime_root_points(double P, const PrimeField& field);

/// Roots of x^2 = pr over ordered prime pairs p <= P, r <= R, both != q.
std::vector<std::uint32_t> product_root_residues(double P, double R, const PrimeField& field);
PointMultiset product_root_points(double P, double R, const PrimeField& field);

double theorem17_envelope(double P, double q);
double corollary15_envelope(double P, double R, double q);

/// Gamma_q(P) and Delta_q(P,R) with envelopes scaled by (log q)^slack_exp.
DiscrepancyReport gamma_q(double P, const PrimeField& field, double slack_exp = 2.0);
DiscrepancyReport delta_q(double P, double R, const PrimeField& field, double slack_exp = 2.0);

/// S_q(h,P): split primes p <= P, p != q, summed over their roots.
Complex s_q_sum(std::uint64_t h, double P, const PrimeField& field);

/// sum_{k <= P} Lambda(k) sum_{x^2 = k} e_q(hx).
Complex lambda_weighted_sum(std::uint64_t h, double P, const PrimeField& field);

/// S_q(h,P) rebuilt from the Lambda-weighted partial sums by removing
/// higher prime powers and k = q, then partial summation against 1/log k.
Complex s_q_from_lambda(std::uint64_t h, double P, const PrimeField& field);

struct CoverageReport {
  std::uint64_t q = 0;
  std::uint64_t covered = 0;
  std::vector<std::uint64_t> missing;
  double fraction = 0.0;
  double threshold = 0.0;  // (PR)^{3/16} S / q^{9/8}
};

/// Reduced classes mod q of the form p r s^2, p <= P and r <= R prime,
/// 1 <= s <= S.
CoverageReport eos_coverage(const PrimeField& field, double P, double R, double S);

}  // namespace sqrtlab
