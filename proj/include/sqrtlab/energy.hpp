#pragma once

#include <cstdint>
#include <vector>

#include "sqrtlab/modular.hpp"
#include "sqrtlab/weights.hpp"

namespace sqrtlab {

// Correlations of weights pulled back through the square map u -> j u^2,
// where j u^2 is read as its representative in [1, q].

/// Points u in F_q with beta_{j u^2} != 0, together with those weights.
struct SquareSupport {
  std::vector<std::uint64_t> points;
  std::vector<Complex> weights;
};

SquareSupport square_support(const WeightVector& beta, std::uint64_t j, const PrimeField& field);

/// Q_{lambda,j}(beta) = sum_{u - v = lambda} beta_{j u^2} conj(beta_{j v^2}),
/// by a direct O(q) scan over u.
Complex q_lambda(const WeightVector& beta, std::uint64_t lambda, std::uint64_t j,
                 const PrimeField& field);

/// The whole table lambda -> Q_{lambda,j}(beta), from the difference
/// histogram of the support (O(q + |support|^2)).
std::vector<Complex> q_lambda_table(const WeightVector& beta, std::uint64_t j,
                                    const PrimeField& field);

/// Integer Q_{lambda,j}(1_[N,2N)) for every lambda.
std::vector<std::int64_t> q_lambda_counts(std::uint64_t N, std::uint64_t j, const PrimeField& field);

/// Weighted additive energy E_{q,j}(beta) = sum_lambda Q_{lambda,j}^2.
Complex energy(const WeightVector& beta, std::uint64_t j, const PrimeField& field);

/// E_{q,j}(1_[N,2N)) as an exact integer.
std::int64_t energy_indicator(std::uint64_t N, std::uint64_t j, const PrimeField& field);

/// E_q(N): quadruples u + v = x + y with all four squares in [N, 2N), via
/// the pair-sum histogram.  Requires 1 <= N and 2N <= q.
std::int64_t unweighted_energy(std::uint64_t N, const PrimeField& field);

/// sum_{lambda != 0} |Q_{lambda,j}(beta)|^4.
double q_fourth_moment(const WeightVector& beta, std::uint64_t j, const PrimeField& field);

/// sum_{lambda != 0} Q_{lambda,j}(1_[N,2N))^4, exact.
std::int64_t q_fourth_moment_indicator(std::uint64_t N, std::uint64_t j, const PrimeField& field);

struct EnergyReport {
  Complex energy;
  std::vector<Complex> q_table;
  double fourth_moment = 0.0;
};

EnergyReport energy_report(const WeightVector& beta, std::uint64_t j, const PrimeField& field);

// Right-hand sides of the energy bounds with the q^{o(1)} / N^{o(1)} factors
// dropped.  Multiply by slack_factor(q, s) = (log q)^s where a slack is wanted.

double slack_factor(double q, double exponent);

/// N^6 / q + N^2
double envelope_propA1(double N, double q);
/// N^{13/2} / q^{3/2} + N^3
double envelope_lemma65(double N, double q);
/// |b|_inf^{8/3} |b|_1^{4/3} (N^{13/6} / q^{1/2} + N)
double envelope_lemma66(double norm_inf, double norm1, double N, double q);
/// |b|_inf^2 |b|_1^2 (N^2 / q + N^{1/2})
double envelope_lemma67(double norm_inf, double norm1, double N, double q);
/// |b|_inf^{8/3} |b|_1^{4/3} N^{2/3}, the comparison term for |b|_2^4.
double envelope_norm2_fourth(double norm_inf, double norm1, double N);

}  // namespace sqrtlab
