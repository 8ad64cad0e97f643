#include "sqrtlab/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "sqrtlab/bilinear.hpp"
#include "sqrtlab/energy.hpp"
#include "sqrtlab/equidist.hpp"
#include "sqrtlab/exp_sums.hpp"
#include "sqrtlab/lattice.hpp"
#include "sqrtlab/modular.hpp"
#include "sqrtlab/primes.hpp"

namespace sqrtlab {

void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

std::uint64_t cell_seed(std::uint64_t seed, std::string_view tag, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  // FNV-1a over the tag, then splitmix64 rounds over the coordinates.
  std::uint64_t x = 0xcbf29ce484222325ull ^ seed;
  for (char ch : tag) x = (x ^ static_cast<unsigned char>(ch)) * 0x100000001b3ull;
  const auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (std::uint64_t v : {a, b, c}) x = mix(x ^ mix(v));
  return x;
}

std::vector<std::uint64_t> dyadic_points(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 1; v <= limit; v *= 2) out.push_back(v);
  return out;
}

namespace {

class Row {
 public:
  explicit Row(std::vector<std::string>& cells) : cells_(cells) {}
  Row& operator<<(double v) { return add(format_double(v)); }
  Row& operator<<(std::int64_t v) { return add(std::to_string(v)); }
  Row& operator<<(std::uint64_t v) { return add(std::to_string(v)); }
  Row& operator<<(int v) { return add(std::to_string(v)); }
  Row& operator<<(std::string_view s) { return add(std::string(s)); }

 private:
  Row& add(std::string s) {
    cells_.push_back(std::move(s));
    return *this;
  }
  std::vector<std::string>& cells_;
};

struct CellResult {
  std::vector<std::vector<std::string>> rows;
  std::map<std::string, double> max;
  std::vector<std::string> failures;

  Row row() { return Row(rows.emplace_back()); }
  void ratio(const std::string& key, double r) {
    double& m = max[key];
    if (std::isnan(r) || r > m) m = r;
  }
  void fail(std::string what) { failures.push_back(std::move(what)); }
};

template <class Cell, class F>
SweepTable run_cells(std::string name, std::vector<std::string> columns, const std::vector<Cell>& cells,
                     const SweepOptions& opts, F&& f) {
  std::vector<CellResult> results(cells.size());
  parallel_for(cells.size(), opts.threads, [&](std::size_t i) { f(cells[i], results[i]); });
  SweepTable t;
  for (const std::string& key : sweep_keys(name)) t.max_ratio[key] = 0.0;
  t.name = std::move(name);
  t.columns = std::move(columns);
  for (CellResult& r : results) {
    for (auto& row : r.rows) {
      if (row.size() != t.columns.size()) throw std::logic_error("sweep " + t.name + ": row width mismatch");
      t.rows.push_back(std::move(row));
    }
    for (const auto& [k, v] : r.max) {
      double& m = t.max_ratio[k];
      if (std::isnan(v) || v > m) m = v;
    }
    for (auto& f2 : r.failures) t.failures.push_back(std::move(f2));
  }
  return t;
}

std::vector<std::uint64_t> moduli(const SweepOptions& opts, std::vector<std::uint64_t> full,
                                  std::vector<std::uint64_t> quick) {
  if (!opts.qset.empty()) return opts.qset;
  return opts.quick ? quick : full;
}

std::vector<std::uint64_t> prime_range(const SweepOptions& opts, std::uint64_t lo, std::uint64_t full_hi,
                                       std::uint64_t quick_hi) {
  if (!opts.qset.empty()) return opts.qset;
  return primes_in_range(lo, opts.quick ? quick_hi : full_hi);
}

std::vector<WeightClass> classes(const SweepOptions& opts, std::vector<WeightClass> dflt) {
  return opts.weights.empty() ? dflt : opts.weights;
}

double slack(const SweepOptions& opts, std::uint64_t q) {
  return slack_factor(static_cast<double>(q), opts.slack_exponent);
}

std::uint64_t unit(Rng& rng, std::uint64_t q) { return rng.range(1, q - 1); }

double ratio_of(double measured, double envelope) {
  if (envelope <= 0.0) return measured == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return measured / envelope;
}

void require_prime(std::uint64_t q, std::uint64_t min_q) {
  if (q < min_q || !is_prime(q)) throw DomainError("sweep: modulus " + std::to_string(q) + " is not a usable prime");
}

// --- energy ---------------------------------------------------------------

SweepTable sweep_propA1(const SweepOptions& opts, bool fourth) {
  const auto qs = prime_range(opts, 3, 499, 101);
  const std::string name = fourth ? "lemma65" : "propA1";
  return run_cells(name, {"q", "N", "measured", "envelope", "ratio"}, qs, opts,
                   [&](std::uint64_t q, CellResult& res) {
                     require_prime(q, 3);
                     const PrimeField field(q);
                     for (std::uint64_t N = 1; N <= isqrt(q) && 2 * N <= q; ++N) {
                       double m, env;
                       if (fourth) {
                         m = static_cast<double>(q_fourth_moment_indicator(N, 1, field));
                         env = envelope_lemma65(static_cast<double>(N), static_cast<double>(q)) * slack(opts, q);
                       } else {
                         m = static_cast<double>(unweighted_energy(N, field));
                         env = envelope_propA1(static_cast<double>(N), static_cast<double>(q));
                       }
                       const double r = ratio_of(m, env);
                       res.ratio(name, r);
                       res.row() << q << N << m << env << r;
                     }
                   });
}

struct ClassCell {
  std::uint64_t q;
  WeightClass cls;
  std::uint64_t seed;
};

std::vector<ClassCell> class_cells(const std::vector<std::uint64_t>& qs, const std::vector<WeightClass>& cls,
                                   std::uint64_t seeds) {
  std::vector<ClassCell> cells;
  for (std::uint64_t q : qs) {
    for (WeightClass c : cls) {
      for (std::uint64_t s = 0; s < seeds; ++s) cells.push_back({q, c, s});
    }
  }
  return cells;
}

SweepTable sweep_lemma66_67(const SweepOptions& opts) {
  const auto qs = moduli(opts, {101, 211, 499, 1009}, {101, 211});
  const auto cells = class_cells(qs, classes(opts, {WeightClass::pm1, WeightClass::phase}), opts.quick ? 2 : 5);
  return run_cells(
      "lemma66_67",
      {"q", "weights", "seed", "j", "N", "norm_inf", "norm1", "energy", "envelope66", "ratio66", "envelope67",
       "ratio67"},
      cells, opts, [&](const ClassCell& c, CellResult& res) {
        require_prime(c.q, 5);
        const PrimeField field(c.q);
        Rng rng(cell_seed(opts.seed, "lemma66_67", c.q, static_cast<std::uint64_t>(c.cls), c.seed));
        const std::uint64_t j = unit(rng, c.q);
        for (std::uint64_t N : dyadic_points(c.q / 2)) {
          const WeightVector beta = WeightVector::make(c.cls, c.q, N, rng);
          const double E = std::abs(energy(beta, j, field));
          const double Nd = static_cast<double>(N), qd = static_cast<double>(c.q);
          const double e66 = envelope_lemma66(beta.norm_inf(), beta.norm1(), Nd, qd) * slack(opts, c.q);
          const double e67 = envelope_lemma67(beta.norm_inf(), beta.norm1(), Nd, qd) * slack(opts, c.q);
          const double r66 = ratio_of(E, e66), r67 = ratio_of(E, e67);
          res.ratio("lemma66", r66);
          res.ratio("lemma67", r67);
          const double n2 = beta.norm2();
          if (n2 * n2 * n2 * n2 > envelope_norm2_fourth(beta.norm_inf(), beta.norm1(), Nd) * (1 + 1e-12)) {
            res.fail("lemma66_67: l2 interpolation broke at q=" + std::to_string(c.q) + " N=" + std::to_string(N));
          }
          res.row() << c.q << to_string(c.cls) << c.seed << j << N << beta.norm_inf() << beta.norm1() << E << e66
                    << r66 << e67 << r67;
        }
      });
}

// --- bilinear -------------------------------------------------------------

SweepTable sweep_thm14(const SweepOptions& opts) {
  const auto qs = moduli(opts, {101, 211, 499, 1009, 1999}, {101, 211});
  const auto cells = class_cells(
      qs, classes(opts, {WeightClass::indicator, WeightClass::pm1, WeightClass::phase}), opts.quick ? 3 : 20);
  return run_cells(
      "thm14",
      {"q", "weights", "seed", "a", "h", "M", "N", "abs_W", "envelope1", "ratio1", "envelope2", "ratio2"}, cells,
      opts, [&](const ClassCell& c, CellResult& res) {
        require_prime(c.q, 5);
        const PrimeField field(c.q);
        Rng rng(cell_seed(opts.seed, "thm14", c.q, static_cast<std::uint64_t>(c.cls), c.seed));
        const std::uint64_t a = unit(rng, c.q), h = unit(rng, c.q);
        const double qd = static_cast<double>(c.q), sl = slack(opts, c.q);
        for (std::uint64_t M : dyadic_points(c.q / 2)) {
          for (std::uint64_t N : dyadic_points(c.q / 2)) {
            BilinearInstance inst{a, h, WeightVector::make(c.cls, c.q, M, rng), WeightVector::make(c.cls, c.q, N, rng)};
            const double W = std::abs(bilinear_weyl_sum(field, inst));
            const double Md = static_cast<double>(M), Nd = static_cast<double>(N);
            const auto& al = inst.alpha;
            const auto& be = inst.beta;
            const double e1 = theorem14_envelope(1, al.norm2(), be.norm_inf(), be.norm1(), Md, Nd, qd) * sl;
            const double e2 = theorem14_envelope(2, al.norm2(), be.norm_inf(), be.norm1(), Md, Nd, qd) * sl;
            const double r1 = ratio_of(W, e1), r2 = ratio_of(W, e2);
            res.ratio("thm14_1", r1);
            res.ratio("thm14_2", r2);
            if (W > 2.0 * al.norm1() * be.norm1() * (1 + 1e-9) + 1e-9) {
              res.fail("thm14: |W| above the trivial bound at q=" + std::to_string(c.q));
            }
            res.row() << c.q << to_string(c.cls) << c.seed << a << h << M << N << W << e1 << r1 << e2 << r2;
          }
        }
      });
}

SweepTable sweep_typeI(const SweepOptions& opts) {
  const auto qs = moduli(opts, {101, 211, 499, 1009}, {101, 211});
  const auto cells = class_cells(qs, classes(opts, {WeightClass::pm1, WeightClass::phase}), opts.quick ? 2 : 5);
  return run_cells("typeI", {"q", "weights", "seed", "a", "h", "M", "N", "abs_V", "envelope", "ratio"}, cells, opts,
                   [&](const ClassCell& c, CellResult& res) {
                     require_prime(c.q, 5);
                     const PrimeField field(c.q);
                     Rng rng(cell_seed(opts.seed, "typeI", c.q, static_cast<std::uint64_t>(c.cls), c.seed));
                     const std::uint64_t a = unit(rng, c.q), h = unit(rng, c.q);
                     const double qd = static_cast<double>(c.q);
                     for (std::uint64_t M : dyadic_points(c.q / 2)) {
                       for (std::uint64_t N : dyadic_points(c.q / 2)) {
                         const double Md = static_cast<double>(M), Nd = static_cast<double>(N);
                         if (!typeI_conditions(Md, Nd, qd)) continue;
                         const WeightVector alpha = WeightVector::make(c.cls, c.q, M, rng);
                         const double V = std::abs(typeI_sum(field, alpha, a, h, N));
                         const double env = typeI_envelope(alpha.norm1(), alpha.norm2(), Md, Nd, qd) * slack(opts, c.q);
                         const double r = ratio_of(V, env);
                         res.ratio("typeI", r);
                         res.row() << c.q << to_string(c.cls) << c.seed << a << h << M << N << V << env << r;
                       }
                     }
                   });
}

SweepTable sweep_A4(const SweepOptions& opts) {
  const auto qs = moduli(opts, {31, 61, 101, 211}, {31, 61});
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
  for (std::uint64_t q : qs) {
    for (std::uint64_t s = 0; s < 3; ++s) cells.emplace_back(q, s);
  }
  return run_cells("A4", {"q", "a", "h", "M", "sum_A4", "energy", "envelope", "ratio"}, cells, opts,
                   [&](const std::pair<std::uint64_t, std::uint64_t>& c, CellResult& res) {
                     const std::uint64_t q = c.first;
                     require_prime(q, 5);
                     const PrimeField field(q);
                     Rng rng(cell_seed(opts.seed, "A4", q, c.second));
                     const std::uint64_t a = unit(rng, q), h = unit(rng, q);
                     for (std::uint64_t M : dyadic_points(q / 2)) {
                       double s4 = 0.0;
                       for (const Complex& A : a_sum_table(field, h, a, M)) s4 += std::norm(A) * std::norm(A);
                       const double E = static_cast<double>(energy_indicator(M, field.inv(a), field));
                       const double env = static_cast<double>(q) * E;
                       const double r = ratio_of(s4, env);
                       res.ratio("A4", r);
                       res.row() << q << a << h << M << s4 << E << env << r;
                     }
                   });
}

Quad draw_quad(Rng& rng, std::uint64_t B) {
  Quad b{};
  for (auto& x : b) x = static_cast<std::int64_t>(rng.range(B + 1, 2 * B));
  return b;
}

SweepTable sweep_propB1(const SweepOptions& opts) {
  const auto qs = moduli(opts, {31, 61, 101}, {31, 61});
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cells;
  for (std::uint64_t q : qs) {
    for (std::uint64_t i = 0; i < (opts.quick ? 5u : 20u); ++i) cells.emplace_back(q, i);
  }
  return run_cells(
      "propB1",
      {"q", "b1", "b2", "b3", "b4", "a", "h", "max_sigma_over_q", "multiplier", "count_u", "ratio_u", "max_ratio_w"},
      cells, opts, [&](const std::pair<std::uint64_t, std::uint64_t>& c, CellResult& res) {
        const std::uint64_t q = c.first;
        require_prime(q, 11);
        const PrimeField field(q);
        Rng rng(cell_seed(opts.seed, "propB1", q, c.second));
        const std::uint64_t a = unit(rng, q), h = unit(rng, q);
        const std::uint64_t B = std::max<std::uint64_t>(2, q / 5);
        Quad b = draw_quad(rng, B);
        while (in_diagonal_set(b)) b = draw_quad(rng, B);
        double best = 0.0;
        for (const Complex& s : curve_sum_sigma_all_t(field, a, h, b)) best = std::max(best, std::abs(s));
        best /= static_cast<double>(q);
        res.ratio("propB1", best);

        const Quad bn = *unique_first(b);
        const double qd = static_cast<double>(q), rq = std::sqrt(qd);
        double ru = 0.0, rw = 0.0;
        std::int64_t cu = 0;
        int mult = 1;
        for (std::uint64_t t = 1; t < q; ++t) {
          const VarietyCounts v = variety_count(bn, t, field);
          cu = v.count_u;
          mult = v.multiplier;
          ru = std::max(ru, std::abs(static_cast<double>(v.count_u) - mult * qd) / rq);
          rw = std::max(rw, std::abs(static_cast<double>(v.count_w) - mult * qd) / rq);
        }
        res.ratio("variety_U", ru);
        res.ratio("variety_W", rw);
        res.row() << q << b[0] << b[1] << b[2] << b[3] << a << h << best << mult << cu << ru << rw;
      });
}

SweepTable sweep_trivbd(const SweepOptions& opts) {
  const auto qs = moduli(opts, {31, 61, 101}, {31});
  struct Cell {
    std::uint64_t q, M, N;
  };
  std::vector<Cell> cells;
  for (std::uint64_t q : qs) {
    cells.push_back({q, q / 4, q / 4});
    cells.push_back({q, q / 8, q / 2});
    cells.push_back({q, q / 2, q / 8});
  }
  return run_cells("trivbd", {"q", "M", "N", "A", "B", "diagonal_quads", "measured", "envelope", "ratio"}, cells, opts,
                   [&](const Cell& c, CellResult& res) {
                     require_prime(c.q, 11);
                     const PrimeField field(c.q);
                     Rng rng(cell_seed(opts.seed, "trivbd", c.q, c.M, c.N));
                     const std::uint64_t a = unit(rng, c.q), h = unit(rng, c.q);
                     const double Md = static_cast<double>(c.M), Nd = static_cast<double>(c.N);
                     const auto [A, Breal] = typeI_balancing(Md, Nd);
                     const auto B = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(Breal)));
                     double total = 0.0;
                     std::int64_t quads = 0;
                     Quad b{};
                     for (b[0] = B + 1; b[0] <= 2 * B; ++b[0])
                       for (b[1] = B + 1; b[1] <= 2 * B; ++b[1])
                         for (b[2] = B + 1; b[2] <= 2 * B; ++b[2])
                           for (b[3] = B + 1; b[3] <= 2 * B; ++b[3]) {
                             if (!in_diagonal_set(b)) continue;
                             ++quads;
                             total += std::abs(curve_sum_sigma(field, a, h, b, A, Md));
                           }
                     const double Bd = static_cast<double>(B);
                     const double env = A * Bd * Bd * Md * static_cast<double>(c.q);
                     const double r = ratio_of(total, env);
                     res.ratio("trivbd", r);
                     res.row() << c.q << c.M << c.N << A << Bd << quads << total << env << r;
                   });
}

SweepTable sweep_propC1(const SweepOptions& opts) {
  const auto qs = prime_range(opts, 5, 499, 101);
  return run_cells("propC1", {"q", "a", "M", "N", "measured", "envelope1", "ratio1", "envelope2", "ratio2"}, qs, opts,
                   [&](std::uint64_t q, CellResult& res) {
                     require_prime(q, 5);
                     const PrimeField field(q);
                     Rng rng(cell_seed(opts.seed, "propC1", q));
                     const std::uint64_t a = unit(rng, q);
                     const double qd = static_cast<double>(q);
                     const auto lim = static_cast<std::uint64_t>(std::floor(std::pow(qd, 2.0 / 3.0) + 1e-9));
                     for (std::uint64_t M : dyadic_points(lim)) {
                       for (std::uint64_t N : dyadic_points(lim)) {
                         const double v = salie_correlation(field, a, M, N);
                         const double Md = static_cast<double>(M), Nd = static_cast<double>(N);
                         const double e1 = propC1_envelope(1, Md, Nd, qd) * slack(opts, q);
                         const double e2 = propC1_envelope(2, Md, Nd, qd) * slack(opts, q);
                         const double r1 = ratio_of(v, e1), r2 = ratio_of(v, e2);
                         res.ratio("propC1_1", r1);
                         res.ratio("propC1_2", r2);
                         if (v > 4.0 * qd * Md * Nd * Nd * (1 + 1e-9)) {
                           res.fail("propC1: trivial bound broke at q=" + std::to_string(q));
                         }
                         res.row() << q << a << M << N << v << e1 << r1 << e2 << r2;
                       }
                     }
                   });
}

// --- lattice --------------------------------------------------------------

SweepTable sweep_lemma63(const SweepOptions& opts) {
  const auto qs = prime_range(opts, 5, 499, 101);
  const std::size_t samples = opts.quick ? 100 : 1000;
  return run_cells(
      "lemma63",
      {"q", "s", "I_lo", "h", "J_lo", "H", "count", "c_counting", "c_reconstruction", "c", "minkowski_ratio"}, qs,
      opts, [&](std::uint64_t q, CellResult& res) {
        require_prime(q, 5);
        Rng rng(cell_seed(opts.seed, "lemma63", q));
        const auto qi = static_cast<std::int64_t>(q);
        for (std::size_t i = 0; i < samples; ++i) {
          const auto s = static_cast<std::int64_t>(rng.range(1, q - 1));
          const auto h = static_cast<std::int64_t>(rng.range(1, q));
          const auto H = static_cast<std::int64_t>(rng.range(1, q));
          const std::int64_t ilo = static_cast<std::int64_t>(rng.range(0, 2 * q - h + 1)) - qi;
          const std::int64_t jlo = static_cast<std::int64_t>(rng.range(0, 2 * q - H + 1)) - qi;
          const DichotomyMeasure d = dichotomy_measure(s, {ilo, ilo + h - 1}, {jlo, jlo + H - 1}, q);
          res.ratio("lemma63", d.c);
          const BoundCheckReport mk = minkowski_check(Lattice2D::congruence(s, q),
                                                      Box2D(static_cast<double>(h), static_cast<double>(H)));
          if (!mk.pass) res.fail("lemma63: Minkowski bound broke at q=" + std::to_string(q) + " s=" + std::to_string(s));
          const double cr = std::isinf(d.c_reconstruction) ? -1.0 : d.c_reconstruction;
          res.row() << q << s << ilo << h << jlo << H << d.count << d.c_counting << cr << d.c << mk.ratio;
        }
      });
}

// --- sums and equidistribution -------------------------------------------

SweepTable sweep_incomplete(const SweepOptions& opts) {
  const auto qs = prime_range(opts, 3, 2003, 211);
  return run_cells("incomplete_sqrt", {"q", "a", "h", "max_partial", "envelope", "ratio"}, qs, opts,
                   [&](std::uint64_t q, CellResult& res) {
                     require_prime(q, 3);
                     const PrimeField field(q);
                     Rng rng(cell_seed(opts.seed, "incomplete_sqrt", q));
                     std::uint64_t nr = 2;
                     while (field.legendre(nr % q) != -1) ++nr;
                     const std::uint64_t ra = unit(rng, q), rh = unit(rng, q);
                     const double qd = static_cast<double>(q);
                     const double env = std::sqrt(qd) * std::log(qd);
                     for (auto [a, h] : {std::pair{std::uint64_t{1}, std::uint64_t{1}}, std::pair{nr, std::uint64_t{1}},
                                         std::pair{ra, rh}}) {
                       const double m = incomplete_sqrt_max(field, a, h);
                       const double r = ratio_of(m, env);
                       res.ratio("incomplete_sqrt", r);
                       res.row() << q << a << h << m << env << r;
                     }
                   });
}

SweepTable sweep_gamma(const SweepOptions& opts) {
  const auto qs = moduli(opts, {503, 1009, 2003, 5003}, {503, 1009});
  std::vector<std::pair<std::uint64_t, double>> cells;
  for (std::uint64_t q : qs) {
    for (double e : {0.7, 0.85, 1.0}) cells.emplace_back(q, e);
  }
  return run_cells("gamma", {"q", "P", "size", "D", "envelope", "ratio"}, cells, opts,
                   [&](const std::pair<std::uint64_t, double>& c, CellResult& res) {
                     require_prime(c.first, 3);
                     const PrimeField field(c.first);
                     const double P = std::floor(std::pow(static_cast<double>(c.first), c.second) + 1e-9);
                     const std::size_t size = prime_root_residues(P, field).size();
                     const DiscrepancyReport d = gamma_q(P, field, opts.slack_exponent);
                     res.ratio("gamma_envelope", d.ratio);
                     if (d.D > static_cast<double>(2 * primes_up_to(static_cast<std::uint64_t>(P)).size()) + 1e-9) {
                       res.fail("gamma: discrepancy above 2 pi(P) at q=" + std::to_string(c.first));
                     }
                     res.row() << c.first << P << static_cast<std::uint64_t>(size) << d.D << d.envelope << d.ratio;
                   });
}

SweepTable sweep_delta(const SweepOptions& opts) {
  const auto qs = moduli(opts, {101, 211, 503}, {101});
  struct Cell {
    std::uint64_t q;
    double ep, er;
  };
  std::vector<Cell> cells;
  for (std::uint64_t q : qs) {
    for (double ep : {0.5, 0.75, 1.0}) {
      for (double er : {0.5, 0.75, 1.0}) cells.push_back({q, ep, er});
    }
  }
  return run_cells("delta", {"q", "P", "R", "size", "D", "envelope", "ratio"}, cells, opts,
                   [&](const Cell& c, CellResult& res) {
                     require_prime(c.q, 3);
                     const PrimeField field(c.q);
                     const double qd = static_cast<double>(c.q);
                     const double P = std::floor(std::pow(qd, c.ep) + 1e-9), R = std::floor(std::pow(qd, c.er) + 1e-9);
                     const auto size = static_cast<std::uint64_t>(product_root_residues(P, R, field).size());
                     const DiscrepancyReport d = delta_q(P, R, field, opts.slack_exponent);
                     res.ratio("delta_envelope", d.ratio);
                     if (d.D > static_cast<double>(size) + 1e-9) res.fail("delta: discrepancy above multiset size");
                     res.row() << c.q << P << R << size << d.D << d.envelope << d.ratio;
                   });
}

struct SweepDef {
  std::string name;
  std::vector<std::string> keys;
  SweepTable (*run)(const SweepOptions&);
};

const std::vector<SweepDef>& registry() {
  static const std::vector<SweepDef> defs = {
      {"propA1", {"propA1"}, [](const SweepOptions& o) { return sweep_propA1(o, false); }},
      {"lemma65", {"lemma65"}, [](const SweepOptions& o) { return sweep_propA1(o, true); }},
      {"lemma66_67", {"lemma66", "lemma67"}, sweep_lemma66_67},
      {"thm14", {"thm14_1", "thm14_2"}, sweep_thm14},
      {"lemma63", {"lemma63"}, sweep_lemma63},
      {"propB1", {"propB1", "variety_U", "variety_W"}, sweep_propB1},
      {"incomplete_sqrt", {"incomplete_sqrt"}, sweep_incomplete},
      {"propC1", {"propC1_1", "propC1_2"}, sweep_propC1},
      {"gamma", {"gamma_envelope"}, sweep_gamma},
      {"delta", {"delta_envelope"}, sweep_delta},
      {"typeI", {"typeI"}, sweep_typeI},
      {"A4", {"A4"}, sweep_A4},
      {"trivbd", {"trivbd"}, sweep_trivbd},
  };
  return defs;
}

const SweepDef& find_sweep(std::string_view name) {
  for (const SweepDef& d : registry()) {
    if (d.name == name) return d;
  }
  throw DomainError("unknown sweep: " + std::string(name));
}

}  // namespace

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const SweepDef& d : registry()) v.push_back(d.name);
    return v;
  }();
  return names;
}

std::vector<std::string> sweep_keys(std::string_view sweep) { return find_sweep(sweep).keys; }

const std::vector<std::string>& calibration_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> v;
    for (const SweepDef& d : registry()) v.insert(v.end(), d.keys.begin(), d.keys.end());
    return v;
  }();
  return keys;
}

SweepTable run_sweep(std::string_view name, const SweepOptions& opts) { return find_sweep(name).run(opts); }

Calibration recalibrate(const SweepOptions& opts, std::ostream* log) {
  SweepOptions full = opts;
  full.quick = false;
  full.qset.clear();
  full.weights.clear();
  Calibration cal;
  cal.set_note(
      "Frozen constants: 1.5 x the largest measured ratio, rounded up to two significant digits. "
      "Envelopes carrying q^o(1) factors are scaled by (log q)^slack_exponent.");
  cal.set_slack_exponent(full.slack_exponent);
  cal.set_seed(full.seed);
  for (const SweepDef& d : registry()) {
    const SweepTable t = d.run(full);
    for (const auto& [key, m] : t.max_ratio) {
      cal.set(key, m, freeze_constant(m));
      if (log) *log << key << ": max ratio " << format_double(m) << " -> " << format_double(freeze_constant(m)) << '\n';
    }
    if (log) {
      for (const std::string& f : t.failures) *log << "  failure: " << f << '\n';
    }
  }
  return cal;
}

void write_csv(std::ostream& out, const SweepTable& table, const SweepOptions& opts) {
  out << "# sweep=" << table.name << " seed=" << opts.seed << " rng=" << Rng::kName
      << " slack_exponent=" << format_double(opts.slack_exponent) << '\n';
  CsvWriter w(out, table.columns);
  for (const auto& row : table.rows) {
    for (const std::string& cell : row) w.cell(std::string_view(cell));
    w.end_row();
  }
}

std::vector<std::string> calibration_violations(const SweepTable& table, const Calibration& cal) {
  std::vector<std::string> out;
  for (const auto& [key, m] : table.max_ratio) {
    if (!cal.contains(key)) {
      out.push_back(key + ": no frozen constant");
    } else if (!(m <= cal.constant(key))) {
      out.push_back(key + ": ratio " + format_double(m) + " exceeds " + format_double(cal.constant(key)));
    }
  }
  return out;
}

}  // namespace sqrtlab
