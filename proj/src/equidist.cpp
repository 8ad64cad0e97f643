#include "sqrtlab/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sqrtlab/energy.hpp"
#include "sqrtlab/kernels.hpp"
#include "sqrtlab/primes.hpp"

namespace sqrtlab {

PointMultiset::PointMultiset(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v >= 0.0 && v < 1.0)) throw DomainError("PointMultiset: points must lie in [0,1)");
  }
  std::sort(values_.begin(), values_.end());
}

PointMultiset PointMultiset::from_residues(std::span<const std::uint32_t> residues, std::uint64_t q) {
  std::vector<double> v;
  v.reserve(residues.size());
  for (std::uint32_t r : residues) v.push_back(static_cast<double>(r) / static_cast<double>(q));
  return PointMultiset(std::move(v));
}

DiscrepancyReport discrepancy(const PointMultiset& pts) {
  DiscrepancyReport rep;
  const auto x = pts.values();
  rep.N = x.size();
  if (x.empty()) return rep;
  const double n = static_cast<double>(x.size());
  const auto [plus, minus] = kernels::discrepancy_extremes(x);
  rep.D = n * (plus + minus);

  // Witness: i (1-based, 0 = the left end) maximizes i/N - x_i and k
  // (N+1 = the right end) maximizes x_k - (k-1)/N.
  std::size_t i = 0, k = x.size() + 1;
  double best_i = 0.0, best_k = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double a = static_cast<double>(j + 1) / n - x[j];
    const double b = x[j] - static_cast<double>(j) / n;
    if (a > best_i) best_i = a, i = j + 1;
    if (b > best_k) best_k = b, k = j + 1;
  }
  const auto at = [&](std::size_t idx) { return idx == 0 ? 0.0 : idx > x.size() ? 1.0 : x[idx - 1]; };
  if (k <= i) {
    rep.alpha = at(k);
    rep.beta = at(i);
    rep.beta_open = true;
  } else {
    rep.alpha = at(i);
    rep.alpha_open = i != 0;
    rep.beta = at(k);
  }
  return rep;
}

double discrepancy_oracle(const PointMultiset& pts) {
  const auto x = pts.values();
  const std::size_t n = x.size();
  if (n == 0) return 0.0;
  struct End {
    double pos;
    int side;  // 0: the value itself, 1: its right limit
    std::size_t below;  // points strictly left of the end
  };
  std::vector<End> ends;
  ends.push_back({0.0, 0, 0});
  for (double v : x) {
    const auto lt = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), v) - x.begin());
    const auto le = static_cast<std::size_t>(std::upper_bound(x.begin(), x.end(), v) - x.begin());
    ends.push_back({v, 0, lt});
    ends.push_back({v, 1, le});
  }
  ends.push_back({1.0, 0, n});
  const double N = static_cast<double>(n);
  double best = 0.0;
  for (const End& a : ends) {
    for (const End& b : ends) {
      if (a.pos > b.pos || (a.pos == b.pos && a.side > b.side)) continue;
      const double count = static_cast<double>(b.below) - static_cast<double>(a.below);
      best = std::max(best, std::abs(count - (b.pos - a.pos) * N));
    }
  }
  return best;
}

double erdos_turan_bound(std::span<const double> abs_sums, std::size_t N, std::size_t H) {
  if (H < 1) throw DomainError("erdos_turan_bound: H must be at least 1");
  if (abs_sums.size() < H) throw DomainError("erdos_turan_bound: need H exponential sums");
  double s = static_cast<double>(N) / static_cast<double>(H + 1);
  for (std::size_t h = 1; h <= H; ++h) s += abs_sums[h - 1] / static_cast<double>(h);
  return 3.0 * s;
}

std::vector<double> residue_exp_sums(const PrimeField& field, std::span<const std::uint32_t> residues,
                                     std::size_t H) {
  if (!field.has_tables()) throw SizeGuardError("residue_exp_sums: field has no tables");
  std::vector<double> out(H);
  std::vector<std::uint32_t> idx(residues.size());
  for (std::size_t h = 1; h <= H; ++h) {
    const std::uint64_t hm = h % field.q();
    for (std::size_t i = 0; i < residues.size(); ++i) idx[i] = static_cast<std::uint32_t>(field.mul(hm, residues[i]));
    out[h - 1] = std::abs(kernels::gather_sum(idx, field.unit_re().data(), field.unit_im().data()));
  }
  return out;
}

std::vector<double> exp_sum_moduli(const PointMultiset& pts, std::size_t H) {
  std::vector<double> out(H);
  for (std::size_t h = 1; h <= H; ++h) {
    Complex s = 0.0;
    for (double v : pts.values()) {
      const double t = 2.0 * std::numbers::pi * std::fmod(static_cast<double>(h) * v, 1.0);
      s += Complex(std::cos(t), std::sin(t));
    }
    out[h - 1] = std::abs(s);
  }
  return out;
}

namespace {

std::vector<std::uint64_t> primes_to(double P, std::uint64_t q) {
  if (P < 2.0) return {};
  std::vector<std::uint64_t> ps = primes_up_to(static_cast<std::uint64_t>(std::floor(P)));
  std::erase(ps, q);
  return ps;
}

void push_roots(const PrimeField& field, std::uint64_t c, std::vector<std::uint32_t>& out) {
  for (std::uint64_t x : field.sqrt(c)) out.push_back(static_cast<std::uint32_t>(x));
}

}  // namespace

std::vector<std::uint32_t> prime_root_residues(double P, const PrimeField& field) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t p : primes_to(P, field.q())) {
    const std::uint64_t c = p % field.q();
    if (field.legendre(c) == 1) push_roots(field, c, out);
  }
  return out;
}

PointMultiset prime_root_points(double P, const PrimeField& field) {
  return PointMultiset::from_residues(prime_root_residues(P, field), field.q());
}

std::vector<std::uint32_t> product_root_residues(double P, double R, const PrimeField& field) {
  const auto ps = primes_to(P, field.q());
  const auto rs = primes_to(R, field.q());
  std::vector<std::uint32_t> out;
  for (std::uint64_t p : ps) {
    for (std::uint64_t r : rs) {
      const std::uint64_t c = field.mul(p % field.q(), r % field.q());
      if (field.legendre(c) == 1) push_roots(field, c, out);
    }
  }
  return out;
}

PointMultiset product_root_points(double P, double R, const PrimeField& field) {
  return PointMultiset::from_residues(product_root_residues(P, R, field), field.q());
}

double theorem17_envelope(double P, double q) {
  return std::pow(q, 61.0 / 1760.0) * std::pow(P, 61.0 / 66.0) + std::pow(q, 13.0 / 110.0) * std::pow(P, 9.0 / 11.0);
}

double corollary15_envelope(double P, double R, double q) {
  const double base = std::pow(q, 1.0 / 8.0) * std::pow(P * R, 19.0 / 24.0);
  const double qq = std::pow(q, 1.0 / 16.0);
  return base * (std::pow(P, 7.0 / 48.0) / qq + 1.0) * (std::pow(R, 7.0 / 48.0) / qq + 1.0);
}

namespace {

DiscrepancyReport with_envelope(DiscrepancyReport rep, double envelope) {
  rep.envelope = envelope;
  rep.ratio = envelope > 0 ? rep.D / envelope : 0.0;
  return rep;
}

void check_range(double P, const PrimeField& field, const char* what) {
  if (P > static_cast<double>(field.q())) throw DomainError(std::string(what) + ": P, R must not exceed q");
}

}  // namespace

DiscrepancyReport gamma_q(double P, const PrimeField& field, double slack_exp) {
  check_range(P, field, "gamma_q");
  const double q = static_cast<double>(field.q());
  return with_envelope(discrepancy(prime_root_points(P, field)),
                       theorem17_envelope(P, q) * slack_factor(field.q(), slack_exp));
}

DiscrepancyReport delta_q(double P, double R, const PrimeField& field, double slack_exp) {
  check_range(P, field, "delta_q");
  check_range(R, field, "delta_q");
  const double q = static_cast<double>(field.q());
  return with_envelope(discrepancy(product_root_points(P, R, field)),
                       corollary15_envelope(P, R, q) * slack_factor(field.q(), slack_exp));
}

namespace {

Complex root_sum(const PrimeField& field, std::uint64_t h, std::uint64_t k) {
  Complex s = 0.0;
  for (std::uint64_t x : field.sqrt(k % field.q())) s += field.unit(field.mul(h % field.q(), x));
  return s;
}

void check_h(std::uint64_t h, const PrimeField& field) {
  if (h % field.q() == 0) throw DomainError("exponential sum: h must be coprime to q");
}

}  // namespace

Complex s_q_sum(std::uint64_t h, double P, const PrimeField& field) {
  check_h(h, field);
  Complex s = 0.0;
  for (std::uint64_t p : primes_to(P, field.q())) s += root_sum(field, h, p);
  return s;
}

Complex lambda_weighted_sum(std::uint64_t h, double P, const PrimeField& field) {
  check_h(h, field);
  Complex s = 0.0;
  if (P < 2.0) return s;
  const auto top = static_cast<std::uint64_t>(std::floor(P));
  for (std::uint64_t k = 2; k <= top; ++k) {
    const double lam = von_mangoldt(k);
    if (lam != 0.0) s += lam * root_sum(field, h, k);
  }
  return s;
}

Complex s_q_from_lambda(std::uint64_t h, double P, const PrimeField& field) {
  check_h(h, field);
  if (P < 2.0) return 0.0;
  const auto top = static_cast<std::uint64_t>(std::floor(P));
  // theta[k] = sum over primes p <= k, p != q, of log p times the root sum,
  // obtained from the running Lambda sum minus the other prime powers.
  std::vector<Complex> theta(top + 1, 0.0);
  Complex lambda_run = 0.0, removed = 0.0;
  for (std::uint64_t k = 2; k <= top; ++k) {
    const double lam = von_mangoldt(k);
    if (lam != 0.0) {
      const Complex term = lam * root_sum(field, h, k);
      lambda_run += term;
      if (!is_prime(k) || k == field.q()) removed += term;
    }
    theta[k] = lambda_run - removed;
  }
  const auto inv_log = [](std::uint64_t k) { return 1.0 / std::log(static_cast<double>(k)); };
  Complex s = theta[top] * inv_log(top);
  for (std::uint64_t k = 2; k + 1 <= top; ++k) s += theta[k] * (inv_log(k) - inv_log(k + 1));
  return s;
}

CoverageReport eos_coverage(const PrimeField& field, double P, double R, double S) {
  const std::uint64_t q = field.q();
  if (q > 200000) throw SizeGuardError("eos_coverage: q above 2e5");
  CoverageReport rep;
  rep.q = q;
  const double qd = static_cast<double>(q);
  rep.threshold = std::pow(P * R, 3.0 / 16.0) * S / std::pow(qd, 9.0 / 8.0);

  std::vector<char> pr(q, 0), sq(q, 0), hit(q, 0);
  const auto ps = primes_to(P, q);
  const auto rs = primes_to(R, q);
  for (std::uint64_t p : ps) {
    for (std::uint64_t r : rs) pr[field.mul(p % q, r % q)] = 1;
  }
  const std::uint64_t smax = S < 1.0 ? 0 : static_cast<std::uint64_t>(std::min(std::floor(S), qd));
  for (std::uint64_t s = 1; s <= smax; ++s) {
    if (s % q != 0) sq[field.mul(s % q, s % q)] = 1;
  }
  std::vector<std::uint64_t> prs, sqs;
  for (std::uint64_t c = 1; c < q; ++c) {
    if (pr[c]) prs.push_back(c);
    if (sq[c]) sqs.push_back(c);
  }
  for (std::uint64_t u : sqs) {
    for (std::uint64_t c : prs) hit[field.mul(u, c)] = 1;
  }
  for (std::uint64_t c = 1; c < q; ++c) {
    if (hit[c]) ++rep.covered;
    else rep.missing.push_back(c);
  }
  rep.fraction = static_cast<double>(rep.covered) / (qd - 1.0);
  return rep;
}

}  // namespace sqrtlab
