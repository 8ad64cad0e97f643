#include "sqrtlab/exp_sums.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "sqrtlab/kernels.hpp"

namespace sqrtlab {

namespace {

void require_tables(const PrimeField& field, const char* what) {
  if (!field.has_tables()) {
    throw SizeGuardError(std::string(what) + ": direct summation needs residue tables (q too large)");
  }
}

}  // namespace

Complex gauss_sum(const PrimeField& field, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t q = field.q();
  a %= q;
  b %= q;
  if (a == 0) throw DomainError("gauss_sum: a must be invertible mod q");
  require_tables(field, "gauss_sum");
  std::vector<std::uint32_t> idx(q);
  // f(x) = a x^2 + b x, stepped by f(x+1) - f(x) = a (2x + 1) + b.
  std::uint64_t f = 0;
  std::uint64_t step = field.add(a, b);
  const std::uint64_t two_a = field.add(a, a);
  for (std::uint64_t x = 0; x < q; ++x) {
    idx[x] = static_cast<std::uint32_t>(f);
    f = field.add(f, step);
    step = field.add(step, two_a);
  }
  return kernels::gather_sum(idx, field.unit_re().data(), field.unit_im().data());
}

Complex gauss_closed_form(const PrimeField& field, std::uint64_t a, std::uint64_t b) {
  const std::uint64_t q = field.q();
  a %= q;
  b %= q;
  if (a == 0) throw DomainError("gauss_closed_form: a must be invertible mod q");
  const std::uint64_t inv4a = field.inv(field.mul(4 % q, a));
  const std::uint64_t phase = field.neg(field.mul(inv4a, field.mul(b, b)));
  return field.unit(phase) * eps_q(q) * std::sqrt(static_cast<double>(q)) *
         static_cast<double>(field.legendre(a));
}

Complex salie_sum(const PrimeField& field, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t q = field.q();
  m %= q;
  n %= q;
  require_tables(field, "salie_sum");
  std::vector<std::uint32_t> idx(q - 1);
  std::vector<double> weight(q - 1);
  for (std::uint64_t x = 1; x < q; ++x) {
    idx[x - 1] = static_cast<std::uint32_t>(field.add(field.mul(m, x), field.mul(n, field.inv(x))));
    weight[x - 1] = static_cast<double>(field.legendre(x));
  }
  return kernels::gather_sum_weighted(idx, weight, field.unit_re().data(), field.unit_im().data());
}

Complex salie_closed_form(const PrimeField& field, std::uint64_t m, std::uint64_t n) {
  const std::uint64_t q = field.q();
  m %= q;
  n %= q;
  const Complex scale = eps_q(q) * std::sqrt(static_cast<double>(q));
  if (m == 0 && n == 0) return {0.0, 0.0};
  if (m == 0) return scale * static_cast<double>(field.legendre(n));
  if (n == 0) return scale * static_cast<double>(field.legendre(m));
  Complex acc{0.0, 0.0};
  for (std::uint64_t x : field.sqrt(field.mul(m, n))) acc += field.unit(field.add(x, x));
  return scale * static_cast<double>(field.legendre(n)) * acc;
}

Complex incomplete_sqrt_sum(const PrimeField& field, std::uint64_t a, std::uint64_t h,
                            std::uint64_t W) {
  const std::uint64_t q = field.q();
  a %= q;
  h %= q;
  if (a == 0 || h == 0) throw DomainError("incomplete_sqrt_sum: need gcd(ah, q) = 1");
  if (W < 1 || W > q) throw DomainError("incomplete_sqrt_sum: need 1 <= W <= q");
  require_tables(field, "incomplete_sqrt_sum");
  std::vector<std::uint32_t> idx;
  idx.reserve(W + 1);
  std::uint64_t aw = 0;
  for (std::uint64_t w = 1; w <= W; ++w) {
    aw = field.add(aw, a);
    for (std::uint64_t x : field.sqrt(aw)) idx.push_back(static_cast<std::uint32_t>(field.mul(h, x)));
  }
  return kernels::gather_sum(idx, field.unit_re().data(), field.unit_im().data());
}

double incomplete_sqrt_max(const PrimeField& field, std::uint64_t a, std::uint64_t h) {
  const std::uint64_t q = field.q();
  a %= q;
  h %= q;
  if (a == 0 || h == 0) throw DomainError("incomplete_sqrt_max: need gcd(ah, q) = 1");
  Complex running{0.0, 0.0};
  double best = 0.0;
  std::uint64_t aw = 0;
  for (std::uint64_t w = 1; w <= q; ++w) {
    aw = field.add(aw, a);
    for (std::uint64_t x : field.sqrt(aw)) running += field.unit(field.mul(h, x));
    best = std::max(best, std::abs(running));
  }
  return best;
}

}  // namespace sqrtlab
