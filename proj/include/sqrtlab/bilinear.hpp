#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "sqrtlab/modular.hpp"
#include "sqrtlab/weights.hpp"

namespace sqrtlab {

/// K(r) = sum_{u^2 = a r} e_q(h u) for every r in F_q, as (re, im) arrays.
class SqrtKernel {
 public:
  SqrtKernel(const PrimeField& field, std::uint64_t a, std::uint64_t h);

  std::uint64_t q() const { return q_; }
  Complex operator()(std::uint64_t r) const { return {re_[r], im_[r]}; }
  const double* re() const { return re_.data(); }
  const double* im() const { return im_.data(); }

 private:
  std::uint64_t q_;
  std::vector<double> re_;
  std::vector<double> im_;
};

/// W_{a,q}(alpha, beta; h, M, N) with M = alpha.start(), N = beta.start().
struct BilinearInstance {
  std::uint64_t a;
  std::uint64_t h;
  WeightVector alpha;
  WeightVector beta;

  std::uint64_t M() const { return alpha.start(); }
  std::uint64_t N() const { return beta.start(); }
};

/// sum_m alpha_m sum_n beta_n sum_{x^2 = amn} e_q(hx).
Complex bilinear_weyl_sum(const PrimeField& field, const BilinearInstance& inst);

/// The inner sums I_m = sum_n beta_n K(mn), one per m in alpha's support.
std::vector<Complex> bilinear_inner_sums(const PrimeField& field, const BilinearInstance& inst);

/// Right-hand side of the first (which = 1) or second (which = 2) bilinear
/// bound, without the q^{o(1)} factor.  Requires M, N <= q/2.
double theorem14_envelope(int which, double alpha_norm2, double beta_norm_inf, double beta_norm1,
                          double M, double N, double q);

/// R_j from its definition: a triple sum over n1, n2, m with explicit roots.
/// O(N^2 M); throws SizeGuardError above max_terms.
Complex rj_sum(int j, const PrimeField& field, const BilinearInstance& inst,
               double max_terms = 1e9);

/// (R_1, R_{-1}) as sums of |I_m|^2 split by the character of am.
std::pair<double, double> rj_sums_fast(const PrimeField& field, const BilinearInstance& inst);

/// A_{h,lambda,a} = sum_{m in [M, 2M)} sum_{t^2 = am} e_q(h t lambda).
Complex a_sum(const PrimeField& field, std::uint64_t h, std::uint64_t lambda, std::uint64_t a,
              std::uint64_t M);

/// lambda -> A_{h,lambda,a} for every lambda in F_q.
std::vector<Complex> a_sum_table(const PrimeField& field, std::uint64_t h, std::uint64_t a,
                                 std::uint64_t M);

/// sum_{m in [M, 2M)} #{t : t^2 = am}.
std::int64_t a_root_count(const PrimeField& field, std::uint64_t a, std::uint64_t M);

/// Type-I sum: bilinear_weyl_sum with beta the indicator of [N, 2N).
Complex typeI_sum(const PrimeField& field, const WeightVector& alpha, std::uint64_t a,
                  std::uint64_t h, std::uint64_t N);

/// sqrt(|alpha|_1 |alpha|_2) M^{1/12} N^{7/12} q^{1/4}.
double typeI_envelope(double alpha_norm1, double alpha_norm2, double M, double N, double q);

/// MN <= q^{3/2} and M <= N^2.
bool typeI_conditions(double M, double N, double q);

/// A = M^{-1/3} N^{2/3} / 2 and B = (MN)^{1/3}.
std::pair<double, double> typeI_balancing(double M, double N);

using Quad = std::array<std::int64_t, 4>;

/// Two entries of b match the other two as multisets.
bool in_diagonal_set(const Quad& b);

/// b reordered so that b[0] occurs once, or nullopt if no entry is unique.
std::optional<Quad> unique_first(const Quad& b);

/// Default limit on q for the O(q^2) curve sums.
inline constexpr std::uint64_t kCurveSumMaxQ = 4096;

/// Sigma(K, b, t) for every t in F_q, indexed by t.
std::vector<Complex> curve_sum_sigma_all_t(const PrimeField& field, std::uint64_t a, std::uint64_t h,
                                           const Quad& b, std::uint64_t max_q = kCurveSumMaxQ);

/// sum_{r, s in F_q} e_q(st) K(s(r+b1)) K(s(r+b2)) conj(K(s(r+b3)) K(s(r+b4))).
Complex curve_sum_sigma_t(const PrimeField& field, std::uint64_t a, std::uint64_t h, const Quad& b,
                          std::uint64_t t, std::uint64_t max_q = kCurveSumMaxQ);

/// Sigma(K, b): r over F_q and 1 <= s <= 2AM.
Complex curve_sum_sigma(const PrimeField& field, std::uint64_t a, std::uint64_t h, const Quad& b,
                        double A, double M, std::uint64_t max_q = kCurveSumMaxQ);

struct VarietyCounts {
  std::int64_t count_u = 0;
  std::int64_t count_w = 0;
  int multiplier = 1;  // A(c1, c2, c3)
};

/// Point counts of x^2 = 1 + c_i u (u in F_q) and x^2 = 1 + c_i w^2 / (4t)
/// with c_i = b_{i+1} - b_1.  Needs every c_i and t nonzero mod q.
VarietyCounts variety_count(const Quad& b, std::uint64_t t, const PrimeField& field);

/// 1, 2 or 4 for three distinct, exactly two equal, or all equal c_i (mod q).
int variety_multiplier(std::uint64_t c1, std::uint64_t c2, std::uint64_t c3);

/// sum_{n1, n2 in [N, 2N)} |sum_{m in [M, 2M)} S(m, a n1) S(m, a n2)|, with
/// S(m, n) = (m/q) S(1, mn) from a cached closed-form table.
double salie_correlation(const PrimeField& field, std::uint64_t a, std::uint64_t M, std::uint64_t N,
                         double max_terms = 1e10);

/// q^{5/4} N (M^{7/8} q^{-1/8} + M^{7/12}) (N^{7/8} q^{-1/8} + N^{7/12}) for
/// which = 1, q^{5/4} N (M q^{-1/4} + M^{5/8}) (N q^{-1/4} + N^{5/8}) for 2.
double propC1_envelope(int which, double M, double N, double q);

}  // namespace sqrtlab
