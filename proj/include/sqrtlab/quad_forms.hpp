#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqrtlab/modular.hpp"

namespace sqrtlab {

/// A X^2 + B XY + C Y^2.
struct BinaryQuadraticForm {
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t C = 0;

  std::int64_t discriminant() const { return B * B - 4 * A * C; }
  std::int64_t operator()(std::int64_t x, std::int64_t y) const { return A * x * x + B * x * y + C * y * y; }
  /// Primitive, |B| <= A <= C, and B >= 0 when |B| = A or A = C.
  bool is_reduced() const;
  friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// The reduced forms of discriminant -q, one per class, ordered by (A, B).
/// Needs q prime, q = 3 (mod 4), q > 3.
std::vector<BinaryQuadraticForm> enumerate_reduced_forms(std::uint64_t q);

std::int64_t class_number(std::uint64_t q);

struct HeegnerPoint {
  Complex z;  // (-B + i sqrt(q)) / (2A)
  BinaryQuadraticForm form;
};

std::vector<HeegnerPoint> heegner_points(std::uint64_t q);

struct Rectangle {
  double x_lo = -0.5;
  double x_hi = 0.5;
  double y_lo = 1.0;
  double y_hi = 10.0;
};

struct HeegnerFraction {
  std::int64_t inside = 0;
  std::int64_t total = 0;
  double fraction = 0.0;
  /// max over forms counted inside of max(|A|, |B|, |C|) / sqrt(q).
  double max_coefficient_ratio = 0.0;
  bool coefficient_bound_holds = true;  // ratio <= 20/3
};

HeegnerFraction heegner_fraction(std::uint64_t q, const Rectangle& omega = {});

/// 27 / (10 pi), the hyperbolic measure of the default rectangle inside the
/// fundamental domain divided by pi/3.
double duke_limit();

/// chi(n) = (-q / n), Kronecker symbol.
int chi(std::int64_t n, std::uint64_t q);

/// r(n) = sum_{d | n} chi(d).
std::int64_t r_function(std::uint64_t n, std::uint64_t q);

/// prod_{p^l || n} (1 + chi(p) + ... + chi(p)^l); needs gcd(n, q) = 1.
std::int64_t r_product_formula(std::uint64_t n, std::uint64_t q);

/// R_{-q}(n) = 2 r(n).
std::int64_t representation_count(std::uint64_t n, std::uint64_t q);

/// b^2 = -q (mod 4n) solvable, decided prime by prime over 4n.
bool is_represented(std::uint64_t n, std::uint64_t q);

/// The same question by scanning b in [0, 2n).
bool is_represented_bruteforce(std::uint64_t n, std::uint64_t q);

/// sum_{n <= x} r(n) = sum_{d <= x} chi(d) floor(x / d), exact.
std::int64_t r_mean_value(double x, std::uint64_t q);

/// 1/n for n = 1..T, shared across many truncated L-series.
class HarmonicTable {
 public:
  explicit HarmonicTable(std::uint64_t T);
  std::uint64_t size() const { return inv_.size(); }
  std::span<const double> values() const { return inv_; }

 private:
  std::vector<double> inv_;
};

/// sum_{n <= T} chi(n) / n, summed one period of chi at a time.  For
/// q = 1 (mod 4) only odd n are summed and the Euler factor at 2 is put back.
double L1_direct(std::uint64_t q, const HarmonicTable& table);
double L1_direct(std::uint64_t q, std::uint64_t T);

struct L1Values {
  double direct = 0.0;
  double exact = 0.0;  // pi h(-q) / sqrt(q); only when has_exact
  bool has_exact = false;
  std::uint64_t T = 0;
};

/// The exact value uses the class number formula, so needs q = 3 (mod 4).
L1Values L1_chi(std::uint64_t q, std::uint64_t T = 1'000'000);

}  // namespace sqrtlab
