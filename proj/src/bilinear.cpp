#include "sqrtlab/bilinear.hpp"

#include <algorithm>
#include <cmath>

#include "sqrtlab/exp_sums.hpp"
#include "sqrtlab/kernels.hpp"

namespace sqrtlab {

namespace {

void require_unit(std::uint64_t x, std::uint64_t q, const char* what) {
  if (x % q == 0) throw DomainError(std::string(what) + " must be invertible mod q");
}

struct SplitComplex {
  std::vector<double> re;
  std::vector<double> im;
};

SplitComplex split(std::span<const Complex> v) {
  SplitComplex s;
  s.re.reserve(v.size());
  s.im.reserve(v.size());
  for (const Complex& z : v) {
    s.re.push_back(z.real());
    s.im.push_back(z.imag());
  }
  return s;
}

void validate(const PrimeField& field, const BilinearInstance& inst) {
  const std::uint64_t q = field.q();
  if (inst.alpha.q() != q || inst.beta.q() != q) throw DomainError("bilinear: weights built for another modulus");
  require_unit(inst.a, q, "bilinear: a");
  require_unit(inst.h, q, "bilinear: h");
}

}  // namespace

SqrtKernel::SqrtKernel(const PrimeField& field, std::uint64_t a, std::uint64_t h)
    : q_(field.q()), re_(field.q()), im_(field.q()) {
  a %= q_;
  h %= q_;
  require_unit(a, q_, "SqrtKernel: a");
  for (std::uint64_t r = 0; r < q_; ++r) {
    Complex acc{0.0, 0.0};
    for (std::uint64_t u : field.sqrt(field.mul(a, r))) acc += field.unit(field.mul(h, u));
    re_[r] = acc.real();
    im_[r] = acc.imag();
  }
}

std::vector<Complex> bilinear_inner_sums(const PrimeField& field, const BilinearInstance& inst) {
  validate(field, inst);
  const std::uint64_t q = field.q();
  const SqrtKernel K(field, inst.a, inst.h);
  const SplitComplex beta = split(inst.beta.values());
  const std::size_t nlen = beta.re.size();
  std::vector<std::uint32_t> idx(nlen);
  std::vector<Complex> inner;
  inner.reserve(inst.alpha.values().size());
  for (std::uint64_t m = inst.alpha.start(); m < inst.alpha.stop(); ++m) {
    const std::uint64_t step = m % q;
    std::uint64_t r = field.mul(step, inst.beta.start() % q);
    for (std::size_t k = 0; k < nlen; ++k) {
      idx[k] = static_cast<std::uint32_t>(r);
      r = field.add(r, step);
    }
    inner.push_back(kernels::gather_sum_cweighted(idx, beta.re, beta.im, K.re(), K.im()));
  }
  return inner;
}

Complex bilinear_weyl_sum(const PrimeField& field, const BilinearInstance& inst) {
  const std::vector<Complex> inner = bilinear_inner_sums(field, inst);
  const SplitComplex a = split(inst.alpha.values());
  const SplitComplex b = split(inner);
  return kernels::dot(a.re, a.im, b.re, b.im);
}

double theorem14_envelope(int which, double alpha_norm2, double beta_norm_inf, double beta_norm1,
                          double M, double N, double q) {
  if (M > q / 2.0 || N > q / 2.0) throw DomainError("theorem14_envelope: need M, N <= q/2");
  if (which == 1) {
    return alpha_norm2 * std::cbrt(beta_norm_inf) * std::pow(beta_norm1, 2.0 / 3.0) * std::pow(q, 0.125) *
           std::pow(M, 7.0 / 24.0) * std::pow(N, 0.125) *
           (std::pow(M, 7.0 / 48.0) / std::pow(q, 1.0 / 16.0) + 1.0) *
           (std::pow(N, 7.0 / 48.0) / std::pow(q, 1.0 / 16.0) + 1.0);
  }
  if (which == 2) {
    return alpha_norm2 * std::pow(beta_norm1, 0.75) * std::pow(beta_norm_inf, 0.25) * std::pow(q, 0.125) *
           std::pow(M, 5.0 / 16.0) * std::pow(N, 1.0 / 16.0) *
           (std::pow(M, 3.0 / 16.0) / std::pow(q, 0.125) + 1.0) *
           (std::pow(N, 3.0 / 16.0) / std::pow(q, 0.125) + 1.0);
  }
  throw DomainError("theorem14_envelope: which must be 1 or 2");
}

Complex rj_sum(int j, const PrimeField& field, const BilinearInstance& inst, double max_terms) {
  validate(field, inst);
  if (j != 1 && j != -1) throw DomainError("rj_sum: j must be +1 or -1");
  const double terms = static_cast<double>(inst.alpha.values().size()) *
                       static_cast<double>(inst.beta.values().size()) *
                       static_cast<double>(inst.beta.values().size());
  if (terms > max_terms) throw SizeGuardError("rj_sum: triple sum exceeds the work limit");
  const std::uint64_t q = field.q();
  const std::uint64_t a = inst.a % q, h = inst.h % q;
  std::vector<std::uint64_t> ns;
  for (std::uint64_t n = inst.beta.start(); n < inst.beta.stop(); ++n) {
    if (field.legendre(n % q) == j) ns.push_back(n);
  }
  Complex total{0.0, 0.0};
  for (std::uint64_t m = inst.alpha.start(); m < inst.alpha.stop(); ++m) {
    const std::uint64_t am = field.mul(a, m % q);
    if (field.legendre(am) != j) continue;
    for (std::uint64_t n1 : ns) {
      const RootSet us = field.sqrt(field.mul(am, n1 % q));
      for (std::uint64_t n2 : ns) {
        const RootSet vs = field.sqrt(field.mul(am, n2 % q));
        Complex s{0.0, 0.0};
        for (std::uint64_t u : us) {
          for (std::uint64_t v : vs) s += field.unit(field.mul(h, field.sub(u, v)));
        }
        total += inst.beta.at(n1) * std::conj(inst.beta.at(n2)) * s;
      }
    }
  }
  return total;
}

std::pair<double, double> rj_sums_fast(const PrimeField& field, const BilinearInstance& inst) {
  const std::vector<Complex> inner = bilinear_inner_sums(field, inst);
  const std::uint64_t q = field.q();
  double r1 = 0.0, rm1 = 0.0;
  for (std::size_t k = 0; k < inner.size(); ++k) {
    const std::uint64_t m = inst.alpha.start() + k;
    const int chi = field.legendre(field.mul(inst.a % q, m % q));
    // With (am/q) = j only n of character j have roots, so |I_m|^2 is the
    // m-term of R_j.
    if (chi == 1) r1 += std::norm(inner[k]);
    if (chi == -1) rm1 += std::norm(inner[k]);
  }
  return {r1, rm1};
}

namespace {

std::vector<std::uint64_t> a_roots(const PrimeField& field, std::uint64_t a, std::uint64_t M) {
  const std::uint64_t q = field.q();
  if (M < 1) throw DomainError("a_sum: M must be positive");
  require_unit(a, q, "a_sum: a");
  std::vector<std::uint64_t> roots;
  for (std::uint64_t m = M; m < 2 * M && m <= q; ++m) {
    for (std::uint64_t t : field.sqrt(field.mul(a % q, m % q))) roots.push_back(t);
  }
  return roots;
}

}  // namespace

Complex a_sum(const PrimeField& field, std::uint64_t h, std::uint64_t lambda, std::uint64_t a,
              std::uint64_t M) {
  const std::uint64_t c = field.mul(h % field.q(), lambda % field.q());
  Complex acc{0.0, 0.0};
  for (std::uint64_t t : a_roots(field, a, M)) acc += field.unit(field.mul(c, t));
  return acc;
}

std::vector<Complex> a_sum_table(const PrimeField& field, std::uint64_t h, std::uint64_t a,
                                 std::uint64_t M) {
  const std::uint64_t q = field.q();
  const std::vector<std::uint64_t> roots = a_roots(field, a, M);
  std::vector<Complex> table(q);
  std::vector<std::uint32_t> idx(roots.size());
  for (std::uint64_t lambda = 0; lambda < q; ++lambda) {
    const std::uint64_t c = field.mul(h % q, lambda);
    for (std::size_t i = 0; i < roots.size(); ++i) idx[i] = static_cast<std::uint32_t>(field.mul(c, roots[i]));
    table[lambda] = kernels::gather_sum(idx, field.unit_re().data(), field.unit_im().data());
  }
  return table;
}

std::int64_t a_root_count(const PrimeField& field, std::uint64_t a, std::uint64_t M) {
  return static_cast<std::int64_t>(a_roots(field, a, M).size());
}

Complex typeI_sum(const PrimeField& field, const WeightVector& alpha, std::uint64_t a,
                  std::uint64_t h, std::uint64_t N) {
  return bilinear_weyl_sum(field, {a, h, alpha, WeightVector::indicator(field.q(), N)});
}

double typeI_envelope(double alpha_norm1, double alpha_norm2, double M, double N, double q) {
  return std::sqrt(alpha_norm1 * alpha_norm2) * std::pow(M, 1.0 / 12.0) * std::pow(N, 7.0 / 12.0) *
         std::pow(q, 0.25);
}

bool typeI_conditions(double M, double N, double q) { return M * N <= std::pow(q, 1.5) && M <= N * N; }

std::pair<double, double> typeI_balancing(double M, double N) {
  return {0.5 * std::pow(M, -1.0 / 3.0) * std::pow(N, 2.0 / 3.0), std::cbrt(M * N)};
}

bool in_diagonal_set(const Quad& b) {
  const auto same = [](std::int64_t x1, std::int64_t x2, std::int64_t y1, std::int64_t y2) {
    return (x1 == y1 && x2 == y2) || (x1 == y2 && x2 == y1);
  };
  return same(b[0], b[1], b[2], b[3]) || same(b[0], b[2], b[1], b[3]) || same(b[0], b[3], b[1], b[2]);
}

std::optional<Quad> unique_first(const Quad& b) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::count(b.begin(), b.end(), b[i]) == 1) {
      Quad r = b;
      std::swap(r[0], r[i]);
      return r;
    }
  }
  return std::nullopt;
}

namespace {

void require_curve_size(const PrimeField& field, std::uint64_t max_q) {
  if (field.q() > max_q) throw SizeGuardError("curve sum: q exceeds the O(q^2) limit");
}

// F(s) = sum_r K(s(r+b1)) K(s(r+b2)) conj(K(s(r+b3)) K(s(r+b4))) for all s.
std::vector<Complex> curve_profile(const PrimeField& field, const SqrtKernel& K, const Quad& b) {
  const std::uint64_t q = field.q();
  std::array<std::uint64_t, 4> br{};
  for (std::size_t i = 0; i < 4; ++i) br[i] = field.reduce(b[i]);
  std::vector<Complex> F(q);
  for (std::uint64_t s = 0; s < q; ++s) {
    Complex acc{0.0, 0.0};
    for (std::uint64_t r = 0; r < q; ++r) {
      const Complex k1 = K(field.mul(s, field.add(r, br[0])));
      const Complex k2 = K(field.mul(s, field.add(r, br[1])));
      const Complex k3 = K(field.mul(s, field.add(r, br[2])));
      const Complex k4 = K(field.mul(s, field.add(r, br[3])));
      acc += k1 * k2 * std::conj(k3 * k4);
    }
    F[s] = acc;
  }
  return F;
}

}  // namespace

std::vector<Complex> curve_sum_sigma_all_t(const PrimeField& field, std::uint64_t a, std::uint64_t h,
                                           const Quad& b, std::uint64_t max_q) {
  require_curve_size(field, max_q);
  const std::uint64_t q = field.q();
  const std::vector<Complex> F = curve_profile(field, SqrtKernel(field, a, h), b);
  const SplitComplex Fs = split(F);
  std::vector<double> e_re(q), e_im(q);
  std::vector<Complex> out(q);
  for (std::uint64_t t = 0; t < q; ++t) {
    for (std::uint64_t s = 0; s < q; ++s) {
      const std::uint64_t k = field.mul(s, t);
      e_re[s] = field.unit_re()[k];
      e_im[s] = field.unit_im()[k];
    }
    out[t] = kernels::dot(e_re, e_im, Fs.re, Fs.im);
  }
  return out;
}

Complex curve_sum_sigma_t(const PrimeField& field, std::uint64_t a, std::uint64_t h, const Quad& b,
                          std::uint64_t t, std::uint64_t max_q) {
  require_curve_size(field, max_q);
  const std::uint64_t q = field.q();
  const std::vector<Complex> F = curve_profile(field, SqrtKernel(field, a, h), b);
  Complex acc{0.0, 0.0};
  for (std::uint64_t s = 0; s < q; ++s) acc += field.unit(field.mul(s, t % q)) * F[s];
  return acc;
}

Complex curve_sum_sigma(const PrimeField& field, std::uint64_t a, std::uint64_t h, const Quad& b,
                        double A, double M, std::uint64_t max_q) {
  require_curve_size(field, max_q);
  const std::uint64_t q = field.q();
  const std::vector<Complex> F = curve_profile(field, SqrtKernel(field, a, h), b);
  const auto smax = static_cast<std::uint64_t>(std::floor(2.0 * A * M));
  Complex acc{0.0, 0.0};
  for (std::uint64_t s = 1; s <= smax; ++s) acc += F[s % q];
  return acc;
}

int variety_multiplier(std::uint64_t c1, std::uint64_t c2, std::uint64_t c3) {
  if (c1 == c2 && c2 == c3) return 4;
  if (c1 == c2 || c2 == c3 || c1 == c3) return 2;
  return 1;
}

VarietyCounts variety_count(const Quad& b, std::uint64_t t, const PrimeField& field) {
  const std::uint64_t q = field.q();
  std::array<std::uint64_t, 3> c{};
  for (std::size_t i = 0; i < 3; ++i) {
    c[i] = field.reduce(b[i + 1] - b[0]);
    if (c[i] == 0) throw DomainError("variety_count: b1 must differ from b2, b3, b4 mod q");
  }
  t %= q;
  if (t == 0) throw DomainError("variety_count: t must be nonzero mod q");
  // Each equation x^2 = v has 1 + (v/q) solutions.
  const auto fibre = [&](std::uint64_t v) {
    std::int64_t n = 1;
    for (std::uint64_t ci : c) n *= 1 + field.legendre(field.add(1, field.mul(ci, v)));
    return n;
  };
  VarietyCounts vc;
  vc.multiplier = variety_multiplier(c[0], c[1], c[2]);
  const std::uint64_t k = field.inv(field.mul(4 % q, t));
  for (std::uint64_t u = 0; u < q; ++u) vc.count_u += fibre(u);
  for (std::uint64_t w = 0; w < q; ++w) vc.count_w += fibre(field.mul(k, field.mul(w, w)));
  return vc;
}

double salie_correlation(const PrimeField& field, std::uint64_t a, std::uint64_t M, std::uint64_t N,
                         double max_terms) {
  const std::uint64_t q = field.q();
  require_unit(a, q, "salie_correlation: a");
  if (M < 1 || N < 1 || M > q || N > q) throw DomainError("salie_correlation: need 1 <= M, N <= q");
  if (static_cast<double>(M) * static_cast<double>(N) * static_cast<double>(N) > max_terms) {
    throw SizeGuardError("salie_correlation: O(M N^2) work exceeds the limit");
  }
  std::vector<Complex> s1(q);
  for (std::uint64_t r = 0; r < q; ++r) s1[r] = salie_closed_form(field, 1, r);
  const auto S = [&](std::uint64_t m, std::uint64_t n) -> Complex {
    m %= q;
    n %= q;
    if (m == 0) return salie_closed_form(field, 0, n);
    return static_cast<double>(field.legendre(m)) * s1[field.mul(m, n)];
  };

  // Row n holds m -> S(m, a n); the inner sum is an unconjugated dot product.
  std::vector<SplitComplex> rows;
  rows.reserve(N);
  for (std::uint64_t n = N; n < 2 * N; ++n) {
    SplitComplex row;
    row.re.reserve(M);
    row.im.reserve(M);
    const std::uint64_t an = field.mul(a % q, n % q);
    for (std::uint64_t m = M; m < 2 * M; ++m) {
      const Complex v = S(m, an);
      row.re.push_back(v.real());
      row.im.push_back(v.imag());
    }
    rows.push_back(std::move(row));
  }
  double total = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total += std::abs(kernels::dot(rows[i].re, rows[i].im, rows[i].re, rows[i].im));
    for (std::size_t k = i + 1; k < rows.size(); ++k) {
      total += 2.0 * std::abs(kernels::dot(rows[i].re, rows[i].im, rows[k].re, rows[k].im));
    }
  }
  return total;
}

double propC1_envelope(int which, double M, double N, double q) {
  const double head = std::pow(q, 1.25) * N;
  if (which == 1) {
    return head * (std::pow(M, 7.0 / 8.0) * std::pow(q, -0.125) + std::pow(M, 7.0 / 12.0)) *
           (std::pow(N, 7.0 / 8.0) * std::pow(q, -0.125) + std::pow(N, 7.0 / 12.0));
  }
  if (which == 2) {
    return head * (M * std::pow(q, -0.25) + std::pow(M, 5.0 / 8.0)) *
           (N * std::pow(q, -0.25) + std::pow(N, 5.0 / 8.0));
  }
  throw DomainError("propC1_envelope: which must be 1 or 2");
}

}  // namespace sqrtlab
