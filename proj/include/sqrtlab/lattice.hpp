#pragma once

#include <cstdint>
#include <optional>

#include "sqrtlab/report.hpp"

namespace sqrtlab {

struct Vec2 {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Full-rank lattice in Z^2 given by a basis.
class Lattice2D {
 public:
  Lattice2D(Vec2 b1, Vec2 b2);  // throws DomainError if dependent

  /// {(x, y) in Z^2 : x = y s (mod q)}, basis (q, 0), (s mod q, 1).
  static Lattice2D congruence(std::int64_t s, std::uint64_t q);

  Vec2 b1() const { return b1_; }
  Vec2 b2() const { return b2_; }
  /// |det(b1, b2)|.
  std::int64_t det() const { return det_; }
  bool contains(Vec2 v) const;

 private:
  Vec2 b1_;
  Vec2 b2_;
  std::int64_t det_;
};

/// {(x, y) : |x| <= h, |y| <= H}.
class Box2D {
 public:
  Box2D(double h, double H);  // throws DomainError unless both are positive

  double h() const { return h_; }
  double H() const { return H_; }
  double volume() const { return 4.0 * h_ * H_; }
  /// Gauge of the box: the least t with v in t * B.
  double norm(Vec2 v) const;
  bool contains(Vec2 v) const;

 private:
  double h_;
  double H_;
};

struct SuccessiveMinima {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Vec2 v1;  // attains lambda1
  Vec2 v2;  // attains lambda2, independent of v1
};

/// Exact successive minima of L with respect to B: a Gauss reduction in the
/// box norm, then certified by enumerating every lattice line that could hold
/// a shorter vector.  Throws SizeGuardError when the certificate range is too
/// large to enumerate.
SuccessiveMinima successive_minima(const Lattice2D& L, const Box2D& B);

/// 1/(lambda1 lambda2) <= Vol(B) / (2 det L).
BoundCheckReport minkowski_check(const Lattice2D& L, const Box2D& B);

struct PointCount {
  std::int64_t count = 0;
  BoundCheckReport bound;  // count <= (2/lambda1 + 1)(4/lambda2 + 1)
};

/// |L cap B| by enumeration along the lines of a reduced basis.
PointCount lattice_points_in_box(const Lattice2D& L, const Box2D& B);

/// Closed integer interval [lo, hi]; empty when hi < lo.
struct IntInterval {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::int64_t length() const { return hi < lo ? 0 : hi - lo + 1; }
};

/// #{(x, y) in I x J : x = y s (mod q)}, iterating the shorter interval.
std::int64_t congruence_count(std::int64_t s, IntInterval I, IntInterval J, std::uint64_t q);

struct Reconstruction {
  std::int64_t a = 0;  // a >= 1
  std::int64_t b = 0;
  friend bool operator==(const Reconstruction&, const Reconstruction&) = default;
};

/// The pair with least a >= 1, |a| <= bound_a, |b| <= bound_b and
/// s = b a^{-1} (mod q), if any.
std::optional<Reconstruction> rational_reconstruction(std::int64_t s, double bound_a, double bound_b,
                                                      std::uint64_t q);

/// Smallest C for which one branch of the short-interval dichotomy holds for
/// this instance: either I(s) <= C max(Hh/q, 1), or some (a, b) with
/// s = b/a has |a| <= C h / I(s) and |b| <= C H / I(s).
struct DichotomyMeasure {
  std::int64_t count = 0;
  double c_counting = 0.0;
  double c_reconstruction = 0.0;
  double c = 0.0;
};

DichotomyMeasure dichotomy_measure(std::int64_t s, IntInterval I, IntInterval J, std::uint64_t q);

}  // namespace sqrtlab
