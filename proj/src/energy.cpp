#include "sqrtlab/energy.hpp"

#include <cmath>
#include <limits>

namespace sqrtlab {

namespace {

// j u^2 as a representative in [1, q].
std::uint64_t square_residue(std::uint64_t u, std::uint64_t j, const PrimeField& field) {
  const std::uint64_t r = field.mul(j, field.mul(u, u));
  return r == 0 ? field.q() : r;
}

void require_unit(std::uint64_t j, const PrimeField& field) {
  if (j % field.q() == 0) throw DomainError("energy: j must be invertible mod q");
}

// Points u with j u^2 in [N, 2N): the roots of j^{-1} r for each r in range.
std::vector<std::uint64_t> indicator_points(std::uint64_t N, std::uint64_t j, const PrimeField& field) {
  const std::uint64_t q = field.q();
  const std::uint64_t jinv = field.inv(j % q);
  std::vector<std::uint64_t> pts;
  for (std::uint64_t r = N; r < 2 * N && r <= q; ++r) {
    for (std::uint64_t u : field.sqrt(field.mul(jinv, r % q))) pts.push_back(u);
  }
  return pts;
}

}  // namespace

SquareSupport square_support(const WeightVector& beta, std::uint64_t j, const PrimeField& field) {
  require_unit(j, field);
  const std::uint64_t q = field.q();
  const std::uint64_t jinv = field.inv(j % q);
  SquareSupport s;
  for (std::uint64_t r = beta.start(); r < beta.stop(); ++r) {
    const Complex w = beta.at(r);
    if (w == Complex{0.0, 0.0}) continue;
    for (std::uint64_t u : field.sqrt(field.mul(jinv, r % q))) {
      s.points.push_back(u);
      s.weights.push_back(w);
    }
  }
  return s;
}

Complex q_lambda(const WeightVector& beta, std::uint64_t lambda, std::uint64_t j,
                 const PrimeField& field) {
  require_unit(j, field);
  const std::uint64_t q = field.q();
  lambda %= q;
  Complex acc{0.0, 0.0};
  for (std::uint64_t u = 0; u < q; ++u) {
    const Complex bu = beta.at(square_residue(u, j, field));
    if (bu == Complex{0.0, 0.0}) continue;
    const std::uint64_t v = field.sub(u, lambda);
    acc += bu * std::conj(beta.at(square_residue(v, j, field)));
  }
  return acc;
}

std::vector<Complex> q_lambda_table(const WeightVector& beta, std::uint64_t j,
                                    const PrimeField& field) {
  const SquareSupport s = square_support(beta, j, field);
  std::vector<Complex> table(field.q(), Complex{0.0, 0.0});
  for (std::size_t a = 0; a < s.points.size(); ++a) {
    for (std::size_t b = 0; b < s.points.size(); ++b) {
      table[field.sub(s.points[a], s.points[b])] += s.weights[a] * std::conj(s.weights[b]);
    }
  }
  return table;
}

std::vector<std::int64_t> q_lambda_counts(std::uint64_t N, std::uint64_t j, const PrimeField& field) {
  require_unit(j, field);
  if (N < 1) throw DomainError("q_lambda_counts: N must be positive");
  const std::vector<std::uint64_t> pts = indicator_points(N, j, field);
  std::vector<std::int64_t> counts(field.q(), 0);
  for (std::uint64_t u : pts) {
    for (std::uint64_t v : pts) ++counts[field.sub(u, v)];
  }
  return counts;
}

Complex energy(const WeightVector& beta, std::uint64_t j, const PrimeField& field) {
  Complex acc{0.0, 0.0};
  for (const Complex& v : q_lambda_table(beta, j, field)) acc += v * v;
  return acc;
}

std::int64_t energy_indicator(std::uint64_t N, std::uint64_t j, const PrimeField& field) {
  std::int64_t acc = 0;
  for (std::int64_t c : q_lambda_counts(N, j, field)) acc += c * c;
  return acc;
}

std::int64_t unweighted_energy(std::uint64_t N, const PrimeField& field) {
  const std::uint64_t q = field.q();
  if (N < 1 || 2 * N > q) throw DomainError("unweighted_energy: need 1 <= N and 2N <= q");
  const std::vector<std::uint64_t> pts = indicator_points(N, 1, field);
  std::vector<std::int64_t> hist(q, 0);
  for (std::uint64_t u : pts) {
    for (std::uint64_t v : pts) ++hist[field.add(u, v)];
  }
  std::int64_t acc = 0;
  for (std::int64_t h : hist) acc += h * h;
  return acc;
}

double q_fourth_moment(const WeightVector& beta, std::uint64_t j, const PrimeField& field) {
  const std::vector<Complex> table = q_lambda_table(beta, j, field);
  double acc = 0.0;
  for (std::size_t l = 1; l < table.size(); ++l) {
    const double n2 = std::norm(table[l]);
    acc += n2 * n2;
  }
  return acc;
}

std::int64_t q_fourth_moment_indicator(std::uint64_t N, std::uint64_t j, const PrimeField& field) {
  const std::vector<std::int64_t> counts = q_lambda_counts(N, j, field);
  __int128 acc = 0;
  for (std::size_t l = 1; l < counts.size(); ++l) {
    const __int128 c2 = static_cast<__int128>(counts[l]) * counts[l];
    acc += c2 * c2;
  }
  if (acc > std::numeric_limits<std::int64_t>::max()) {
    throw SizeGuardError("q_fourth_moment_indicator: result exceeds 64 bits");
  }
  return static_cast<std::int64_t>(acc);
}

EnergyReport energy_report(const WeightVector& beta, std::uint64_t j, const PrimeField& field) {
  EnergyReport r;
  r.q_table = q_lambda_table(beta, j, field);
  r.energy = {0.0, 0.0};
  for (std::size_t l = 0; l < r.q_table.size(); ++l) {
    r.energy += r.q_table[l] * r.q_table[l];
    if (l != 0) {
      const double n2 = std::norm(r.q_table[l]);
      r.fourth_moment += n2 * n2;
    }
  }
  return r;
}

double slack_factor(double q, double exponent) { return std::pow(std::log(q), exponent); }

double envelope_propA1(double N, double q) { return std::pow(N, 6.0) / q + N * N; }

double envelope_lemma65(double N, double q) {
  return std::pow(N, 6.5) / std::pow(q, 1.5) + std::pow(N, 3.0);
}

double envelope_lemma66(double norm_inf, double norm1, double N, double q) {
  return std::pow(norm_inf, 8.0 / 3.0) * std::pow(norm1, 4.0 / 3.0) *
         (std::pow(N, 13.0 / 6.0) / std::sqrt(q) + N);
}

double envelope_lemma67(double norm_inf, double norm1, double N, double q) {
  return norm_inf * norm_inf * norm1 * norm1 * (N * N / q + std::sqrt(N));
}

double envelope_norm2_fourth(double norm_inf, double norm1, double N) {
  return std::pow(norm_inf, 8.0 / 3.0) * std::pow(norm1, 4.0 / 3.0) * std::pow(N, 2.0 / 3.0);
}

}  // namespace sqrtlab
