#include "sqrtlab/quad_forms.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "sqrtlab/kernels.hpp"
#include "sqrtlab/primes.hpp"

namespace sqrtlab {

bool BinaryQuadraticForm::is_reduced() const {
  if (std::gcd(std::gcd(A, B), C) != 1) return false;
  if (!(std::abs(B) <= A && A <= C)) return false;
  if ((std::abs(B) == A || A == C) && B < 0) return false;
  return true;
}

namespace {

void require_class_modulus(std::uint64_t q) {
  if (q <= 3 || q % 4 != 3 || !is_prime(q)) {
    throw DomainError("quadratic forms: need q prime, q = 3 mod 4, q > 3");
  }
}

}  // namespace

std::vector<BinaryQuadraticForm> enumerate_reduced_forms(std::uint64_t q) {
  require_class_modulus(q);
  const auto qi = static_cast<std::int64_t>(q);
  std::vector<BinaryQuadraticForm> forms;
  // 3A^2 <= 4AC - B^2 = q bounds A; B is odd because B^2 = -q (mod 4).
  for (std::int64_t A = 1; 3 * A * A <= qi; ++A) {
    for (std::int64_t B = -A + 1; B <= A; B += 1) {
      if ((B & 1) == 0) continue;
      const std::int64_t num = B * B + qi;
      if (num % (4 * A) != 0) continue;
      const BinaryQuadraticForm f{A, B, num / (4 * A)};
      if (f.is_reduced()) forms.push_back(f);
    }
  }
  return forms;
}

std::int64_t class_number(std::uint64_t q) { return static_cast<std::int64_t>(enumerate_reduced_forms(q).size()); }

std::vector<HeegnerPoint> heegner_points(std::uint64_t q) {
  const double root = std::sqrt(static_cast<double>(q));
  std::vector<HeegnerPoint> pts;
  for (const BinaryQuadraticForm& f : enumerate_reduced_forms(q)) {
    const double den = 2.0 * static_cast<double>(f.A);
    pts.push_back({Complex{-static_cast<double>(f.B) / den, root / den}, f});
  }
  return pts;
}

HeegnerFraction heegner_fraction(std::uint64_t q, const Rectangle& omega) {
  const double root = std::sqrt(static_cast<double>(q));
  HeegnerFraction hf;
  for (const HeegnerPoint& p : heegner_points(q)) {
    ++hf.total;
    const double x = p.z.real(), y = p.z.imag();
    if (x < omega.x_lo || x > omega.x_hi || y < omega.y_lo || y > omega.y_hi) continue;
    ++hf.inside;
    const auto big = std::max({std::abs(p.form.A), std::abs(p.form.B), std::abs(p.form.C)});
    hf.max_coefficient_ratio = std::max(hf.max_coefficient_ratio, static_cast<double>(big) / root);
  }
  hf.fraction = hf.total ? static_cast<double>(hf.inside) / static_cast<double>(hf.total) : 0.0;
  hf.coefficient_bound_holds = hf.max_coefficient_ratio <= 20.0 / 3.0;
  return hf;
}

double duke_limit() { return 27.0 / (10.0 * std::numbers::pi); }

int chi(std::int64_t n, std::uint64_t q) { return kronecker(-static_cast<std::int64_t>(q), n); }

std::int64_t r_function(std::uint64_t n, std::uint64_t q) {
  if (n < 1) throw DomainError("r_function: n must be positive");
  std::int64_t r = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    r += chi(static_cast<std::int64_t>(d), q);
    if (d * d != n) r += chi(static_cast<std::int64_t>(n / d), q);
  }
  return r;
}

std::int64_t r_product_formula(std::uint64_t n, std::uint64_t q) {
  if (n < 1) throw DomainError("r_product_formula: n must be positive");
  if (n % q == 0) throw DomainError("r_product_formula: needs gcd(n, q) = 1");
  std::int64_t r = 1;
  for (const PrimePower& pp : factorize(n)) {
    const int c = chi(static_cast<std::int64_t>(pp.p), q);
    std::int64_t s = 0, power = 1;
    for (int l = 0; l <= pp.e; ++l) {
      s += power;
      power *= c;
    }
    r *= s;
  }
  return r;
}

std::int64_t representation_count(std::uint64_t n, std::uint64_t q) { return 2 * r_function(n, q); }

bool is_represented(std::uint64_t n, std::uint64_t q) {
  if (n < 1) throw DomainError("is_represented: n must be positive");
  const auto mq = -static_cast<std::int64_t>(q);
  int e2 = 2;  // exponent of 2 in 4n
  for (const PrimePower& pp : factorize(n)) {
    if (pp.p == 2) {
      e2 += pp.e;
    } else if (pp.p == q) {
      // b^2 = -q (mod q^2) would force q | b and then q^2 | q.
      if (pp.e > 1) return false;
    } else if (kronecker(mq, static_cast<std::int64_t>(pp.p)) != 1) {
      return false;  // an odd unit is a square mod p^e iff it is one mod p
    }
  }
  const std::uint64_t r8 = reduce(mq, 8);
  return e2 == 2 ? r8 % 4 == 1 : r8 == 1;
}

bool is_represented_bruteforce(std::uint64_t n, std::uint64_t q) {
  const std::uint64_t m = 4 * n;
  const std::uint64_t target = reduce(-static_cast<std::int64_t>(q), m);
  // (b + 2n)^2 = b^2 (mod 4n), so b in [0, 2n) covers every class.
  for (std::uint64_t b = 0; b < 2 * n; ++b) {
    if (mul_mod(b, b, m) == target) return true;
  }
  return false;
}

std::int64_t r_mean_value(double x, std::uint64_t q) {
  if (x < 1.0) throw DomainError("r_mean_value: x must be at least 1");
  const auto X = static_cast<std::int64_t>(std::floor(x));
  std::int64_t s = 0;
  for (std::int64_t d = 1; d <= X; ++d) s += chi(d, q) * (X / d);
  return s;
}

HarmonicTable::HarmonicTable(std::uint64_t T) : inv_(T) {
  for (std::uint64_t n = 1; n <= T; ++n) inv_[n - 1] = 1.0 / static_cast<double>(n);
}

double L1_direct(std::uint64_t q, const HarmonicTable& table) {
  // (-q / .) has period q when -q = 1 (mod 4).  Otherwise it is periodic
  // mod 4q only on odd n, so sum the odd terms and restore the factor at 2.
  const bool odd_only = q % 4 != 3;
  const std::uint64_t period = odd_only ? 4 * q : q;
  std::vector<double> chi_tab(period);
  for (std::uint64_t n = 1; n <= period; ++n) {
    chi_tab[n - 1] = odd_only && n % 2 == 0 ? 0.0 : chi(static_cast<std::int64_t>(n), q);
  }
  const std::span<const double> inv = table.values();
  const std::span<const double> c(chi_tab);
  double total = 0.0;
  for (std::uint64_t start = 0; start < inv.size(); start += period) {
    const std::uint64_t len = std::min<std::uint64_t>(period, inv.size() - start);
    total += kernels::dot_real(c.first(len), inv.subspan(start, len));
  }
  if (odd_only) total /= 1.0 - chi(2, q) / 2.0;
  return total;
}

double L1_direct(std::uint64_t q, std::uint64_t T) { return L1_direct(q, HarmonicTable(T)); }

L1Values L1_chi(std::uint64_t q, std::uint64_t T) {
  L1Values v;
  v.T = T;
  v.direct = L1_direct(q, T);
  if (q > 3 && q % 4 == 3) {
    v.exact = std::numbers::pi * static_cast<double>(class_number(q)) / std::sqrt(static_cast<double>(q));
    v.has_exact = true;
  }
  return v;
}

}  // namespace sqrtlab
