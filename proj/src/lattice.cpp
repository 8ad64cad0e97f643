#include "sqrtlab/lattice.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>

#include "sqrtlab/errors.hpp"
#include "sqrtlab/modular.hpp"

namespace sqrtlab {

namespace {

constexpr std::int64_t kMaxLines = 50'000'000;

Vec2 combo(std::int64_t c1, Vec2 a, std::int64_t c2, Vec2 b) {
  return {c1 * a.x + c2 * b.x, c1 * a.y + c2 * b.y};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t to_int(double v) {
  constexpr double kLimit = 4.0e18;
  if (!(std::abs(v) < kLimit)) throw SizeGuardError("lattice: coordinate exceeds 64-bit range");
  return static_cast<std::int64_t>(v);
}

struct LineMin {
  std::int64_t c = 0;
  double value = std::numeric_limits<double>::infinity();
};

// Integer c minimising the box norm of c*a + w.  The norm is convex and
// piecewise linear in c, so the integer minimum sits next to a breakpoint.
LineMin best_on_line(Vec2 a, Vec2 w, const Box2D& B) {
  const double ax = static_cast<double>(a.x) / B.h(), ay = static_cast<double>(a.y) / B.H();
  const double wx = static_cast<double>(w.x) / B.h(), wy = static_cast<double>(w.y) / B.H();
  std::array<double, 4> breaks{};
  std::size_t nb = 0;
  if (ax != 0.0) breaks[nb++] = -wx / ax;
  if (ay != 0.0) breaks[nb++] = -wy / ay;
  if (ax - ay != 0.0) breaks[nb++] = (wy - wx) / (ax - ay);
  if (ax + ay != 0.0) breaks[nb++] = -(wy + wx) / (ax + ay);
  LineMin best;
  for (std::size_t i = 0; i < nb; ++i) {
    const std::int64_t f = to_int(std::floor(breaks[i]));
    for (std::int64_t c = f - 1; c <= f + 2; ++c) {
      const double v = B.norm({c * a.x + w.x, c * a.y + w.y});
      if (v < best.value || (v == best.value && std::llabs(c) < std::llabs(best.c))) best = {c, v};
    }
  }
  return best;
}

struct Reduced {
  Vec2 a;
  Vec2 b;
};

Reduced gauss_reduce(const Lattice2D& L, const Box2D& B) {
  Vec2 a = L.b1(), b = L.b2();
  if (B.norm(a) > B.norm(b)) std::swap(a, b);
  for (int iter = 0; iter < 10'000; ++iter) {
    const LineMin m = best_on_line(a, b, B);
    const Vec2 nb{b.x + m.c * a.x, b.y + m.c * a.y};
    if (B.norm(nb) >= B.norm(a)) return {a, nb};
    b = a;
    a = nb;
  }
  throw std::logic_error("gauss_reduce: no convergence");
}

// Largest |c2| for which c1*a + c2*b can have box norm <= rho.
std::int64_t line_range(const Reduced& r, std::int64_t det, double rho, const Box2D& B) {
  const double bound =
      (std::abs(static_cast<double>(r.a.x)) * rho * B.H() + std::abs(static_cast<double>(r.a.y)) * rho * B.h()) /
      static_cast<double>(det);
  if (!(bound < static_cast<double>(kMaxLines))) {
    throw SizeGuardError("lattice: enumeration range too large for this box aspect");
  }
  return static_cast<std::int64_t>(std::floor(bound)) + 1;
}

}  // namespace

Lattice2D::Lattice2D(Vec2 b1, Vec2 b2) : b1_(b1), b2_(b2) {
  const __int128 d = static_cast<__int128>(b1.x) * b2.y - static_cast<__int128>(b1.y) * b2.x;
  if (d == 0) throw DomainError("Lattice2D: basis vectors are dependent");
  const __int128 ad = d < 0 ? -d : d;
  if (ad > std::numeric_limits<std::int64_t>::max()) throw DomainError("Lattice2D: determinant overflow");
  det_ = static_cast<std::int64_t>(ad);
}

Lattice2D Lattice2D::congruence(std::int64_t s, std::uint64_t q) {
  if (q < 1) throw DomainError("Lattice2D::congruence: q must be positive");
  return Lattice2D({static_cast<std::int64_t>(q), 0},
                   {static_cast<std::int64_t>(reduce(s, q)), 1});
}

bool Lattice2D::contains(Vec2 v) const {
  // Solve v = c1 b1 + c2 b2 by Cramer's rule and test integrality.
  const __int128 d = static_cast<__int128>(b1_.x) * b2_.y - static_cast<__int128>(b1_.y) * b2_.x;
  const __int128 n1 = static_cast<__int128>(v.x) * b2_.y - static_cast<__int128>(v.y) * b2_.x;
  const __int128 n2 = static_cast<__int128>(b1_.x) * v.y - static_cast<__int128>(b1_.y) * v.x;
  return n1 % d == 0 && n2 % d == 0;
}

Box2D::Box2D(double h, double H) : h_(h), H_(H) {
  if (!(h > 0.0) || !(H > 0.0) || !std::isfinite(h) || !std::isfinite(H)) {
    throw DomainError("Box2D: half-widths must be positive and finite");
  }
}

double Box2D::norm(Vec2 v) const {
  return std::max(std::abs(static_cast<double>(v.x)) / h_, std::abs(static_cast<double>(v.y)) / H_);
}

bool Box2D::contains(Vec2 v) const {
  return std::abs(static_cast<double>(v.x)) <= h_ && std::abs(static_cast<double>(v.y)) <= H_;
}

SuccessiveMinima successive_minima(const Lattice2D& L, const Box2D& B) {
  const Reduced r = gauss_reduce(L, B);
  const double m0 = B.norm(r.a);
  const std::int64_t K = line_range(r, L.det(), B.norm(r.b), B);

  double mstar = std::numeric_limits<double>::infinity();
  Vec2 vstar = r.b;
  for (std::int64_t c2 = 1; c2 <= K; ++c2) {
    const Vec2 w{c2 * r.b.x, c2 * r.b.y};
    const LineMin m = best_on_line(r.a, w, B);
    if (m.value < mstar) {
      mstar = m.value;
      vstar = {m.c * r.a.x + w.x, m.c * r.a.y + w.y};
    }
  }
  if (mstar < m0) throw std::logic_error("successive_minima: reduction left a shorter vector");
  return {m0, mstar, r.a, vstar};
}

BoundCheckReport minkowski_check(const Lattice2D& L, const Box2D& B) {
  const SuccessiveMinima sm = successive_minima(L, B);
  return check_bound("minkowski", 1.0 / (sm.lambda1 * sm.lambda2),
                     B.volume() / (2.0 * static_cast<double>(L.det())), 1.0);
}

PointCount lattice_points_in_box(const Lattice2D& L, const Box2D& B) {
  const Reduced r = gauss_reduce(L, B);
  const std::int64_t K = line_range(r, L.det(), 1.0, B);
  const auto inside = [&](std::int64_t c1, std::int64_t c2) { return B.contains(combo(c1, r.a, c2, r.b)); };

  std::int64_t count = 0;
  for (std::int64_t c2 = -K; c2 <= K; ++c2) {
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool feasible = true;
    const auto clip = [&](std::int64_t a, std::int64_t w, double half) {
      if (a == 0) {
        if (std::abs(static_cast<double>(w)) > half) feasible = false;
        return;
      }
      double l = (-half - static_cast<double>(w)) / static_cast<double>(a);
      double u = (half - static_cast<double>(w)) / static_cast<double>(a);
      if (l > u) std::swap(l, u);
      lo = std::max(lo, l);
      hi = std::min(hi, u);
    };
    clip(r.a.x, c2 * r.b.x, B.h());
    clip(r.a.y, c2 * r.b.y, B.H());
    if (!feasible || lo > hi + 1.0) continue;
    std::int64_t c_lo = to_int(std::ceil(lo));
    std::int64_t c_hi = to_int(std::floor(hi));
    // The real interval was computed in floating point; settle the integer
    // endpoints with exact membership tests.
    while (inside(c_lo - 1, c2)) --c_lo;
    while (c_lo <= c_hi && !inside(c_lo, c2)) ++c_lo;
    while (inside(c_hi + 1, c2)) ++c_hi;
    while (c_hi >= c_lo && !inside(c_hi, c2)) --c_hi;
    if (c_hi >= c_lo) count += c_hi - c_lo + 1;
  }

  const SuccessiveMinima sm = successive_minima(L, B);
  PointCount pc;
  pc.count = count;
  pc.bound = check_bound("lattice_points", static_cast<double>(count),
                         (2.0 / sm.lambda1 + 1.0) * (4.0 / sm.lambda2 + 1.0), 1.0);
  return pc;
}

namespace {

// #{x in [lo, hi] : x = r (mod q)}.
std::int64_t count_residue(IntInterval I, std::uint64_t r, std::uint64_t q) {
  if (I.length() == 0) return 0;
  const auto qi = static_cast<std::int64_t>(q);
  const auto ri = static_cast<std::int64_t>(r);
  return floor_div(I.hi - ri, qi) - floor_div(I.lo - 1 - ri, qi);
}

}  // namespace

std::int64_t congruence_count(std::int64_t s, IntInterval I, IntInterval J, std::uint64_t q) {
  if (q < 2) throw DomainError("congruence_count: q must be at least 2");
  if (I.length() == 0 || J.length() == 0) return 0;
  const std::uint64_t sr = reduce(s, q);
  std::int64_t count = 0;
  if (J.length() <= I.length()) {
    for (std::int64_t y = J.lo; y <= J.hi; ++y) count += count_residue(I, mul_mod(reduce(y, q), sr, q), q);
    return count;
  }
  if (sr == 0) return count_residue(I, 0, q) * J.length();
  const std::uint64_t sinv = inv_mod(static_cast<std::int64_t>(sr), q);
  for (std::int64_t x = I.lo; x <= I.hi; ++x) count += count_residue(J, mul_mod(reduce(x, q), sinv, q), q);
  return count;
}

namespace {

std::int64_t centered(std::uint64_t r, std::uint64_t q) {
  return r <= q / 2 ? static_cast<std::int64_t>(r) : static_cast<std::int64_t>(r) - static_cast<std::int64_t>(q);
}

constexpr std::int64_t kMaxReconstructionScan = 100'000'000;

}  // namespace

std::optional<Reconstruction> rational_reconstruction(std::int64_t s, double bound_a, double bound_b,
                                                      std::uint64_t q) {
  if (q < 2) throw DomainError("rational_reconstruction: q must be at least 2");
  if (!(bound_a >= 1.0) || !(bound_b >= 0.0)) return std::nullopt;
  const std::uint64_t sr = reduce(s, q);
  // a and a + q give the same centred b, so a <= q suffices.
  const double cap = std::min(std::floor(bound_a), static_cast<double>(q));
  if (cap > static_cast<double>(kMaxReconstructionScan)) {
    throw SizeGuardError("rational_reconstruction: scan range too large");
  }
  const auto amax = static_cast<std::int64_t>(cap);
  for (std::int64_t a = 1; a <= amax; ++a) {
    const std::int64_t b = centered(mul_mod(static_cast<std::uint64_t>(a), sr, q), q);
    if (std::abs(static_cast<double>(b)) <= bound_b) return Reconstruction{a, b};
  }
  return std::nullopt;
}

DichotomyMeasure dichotomy_measure(std::int64_t s, IntInterval I, IntInterval J, std::uint64_t q) {
  DichotomyMeasure d;
  d.count = congruence_count(s, I, J, q);
  if (d.count == 0) return d;
  const double h = static_cast<double>(I.length());
  const double H = static_cast<double>(J.length());
  const double n = static_cast<double>(d.count);
  d.c_counting = n / std::max(H * h / static_cast<double>(q), 1.0);
  d.c_reconstruction = std::numeric_limits<double>::infinity();
  const std::uint64_t sr = reduce(s, q);
  // Only a < c_counting * h / n can beat the counting branch.
  const double alimit = std::min(d.c_counting * h / n, static_cast<double>(q));
  for (std::int64_t a = 1; static_cast<double>(a) <= alimit; ++a) {
    const std::int64_t b = centered(mul_mod(static_cast<std::uint64_t>(a), sr, q), q);
    const double c = std::max(static_cast<double>(a) * n / h, std::abs(static_cast<double>(b)) * n / H);
    d.c_reconstruction = std::min(d.c_reconstruction, c);
  }
  d.c = std::min(d.c_counting, d.c_reconstruction);
  return d;
}

}  // namespace sqrtlab
